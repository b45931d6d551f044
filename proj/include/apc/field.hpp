#pragma once

#include <string>

#include "apc/numeric.hpp"
#include "apc/ratfunc.hpp"

namespace apc {

template <class F>
struct field_traits;

template <>
struct field_traits<Rat> {
    static std::string name() { return "Q"; }
    static std::string to_string(const Rat& x) { return x.get_str(); }
};

template <>
struct field_traits<RatFunc> {
    static std::string name() { return "Q(t)"; }
    static std::string to_string(const RatFunc& x) { return x.to_string(); }
};

static_assert(ExactField<Rat>);
static_assert(ExactField<RatFunc>);

}  // namespace apc
