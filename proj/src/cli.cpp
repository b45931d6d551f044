namespace apc {
}  // namespace apc
