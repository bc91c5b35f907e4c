#include "smar/iterations.hpp"

#include <stdexcept>

namespace smar {

const char* iter_function_name(IterFunction f) {
    switch (f) {
        case IterFunction::divisor_count: return "d";
        case IterFunction::divisor_sum: return "sigma";
        case IterFunction::greatest_proper_divisor: return "gd";
    }
    return "?";
}

namespace {

u64 apply(IterFunction f, u64 x) {
    switch (f) {
        case IterFunction::divisor_count: return num_divisors(x);
        case IterFunction::divisor_sum: return sum_divisors(x);
        case IterFunction::greatest_proper_divisor: return greatest_proper_divisor(x);
    }
    throw std::logic_error("apply: bad function");
}

[[noreturn]] void cap_exceeded() {
    throw std::runtime_error("iteration cap exceeded: instance contract violated");
}

} // namespace

IterationTrace iterate_first_kind(IterFunction f, u64 x) {
    if (f != IterFunction::divisor_count)
        throw std::domain_error("iterate_first_kind: no fixed-point set registered for this function");
    if (x == 0) throw std::domain_error("iterate_first_kind: x must be >= 1");
    IterationTrace t{f, x, std::nullopt, {x}, 0};
    u64 v = x;
    do {
        if (t.count >= kIterationCap) cap_exceeded();
        v = apply(f, v);
        t.orbit.push_back(v);
        ++t.count;
    } while (v != 1 && v != 2); // the fixed points of d
    return t;
}

IterationTrace iterate_second_kind(IterFunction g, u64 x, u64 b) {
    if (g != IterFunction::divisor_sum)
        throw std::domain_error("iterate_second_kind: function not registered as strictly increasing");
    if (x < 2) throw std::domain_error("iterate_second_kind: sigma instance needs x > 1");
    if (b <= x) throw std::domain_error("iterate_second_kind: requires b > x");
    IterationTrace t{g, x, b, {x}, 0};
    u64 v = x;
    do {
        if (t.count >= kIterationCap) cap_exceeded();
        u64 next = apply(g, v);
        if (next <= v) throw std::runtime_error("iterate_second_kind: map failed to increase");
        v = next;
        t.orbit.push_back(v);
        ++t.count;
    } while (v < b);
    return t;
}

IterationTrace iterate_third_kind(IterFunction h, u64 x, u64 b) {
    if (h != IterFunction::greatest_proper_divisor)
        throw std::domain_error("iterate_third_kind: function not registered as strictly decreasing");
    if (x < 2) throw std::domain_error("iterate_third_kind: gd instance needs x > 1");
    if (b >= x) throw std::domain_error("iterate_third_kind: requires b < x");
    if (b < 1) throw std::domain_error("iterate_third_kind: b must be >= 1");
    IterationTrace t{h, x, b, {x}, 0};
    u64 v = x;
    do {
        if (t.count >= kIterationCap) cap_exceeded();
        u64 next = apply(h, v);
        if (next >= v) throw std::runtime_error("iterate_third_kind: map failed to decrease");
        v = next;
        t.orbit.push_back(v);
        ++t.count;
    } while (v > b);
    return t;
}

} // namespace smar
