#pragma once

#include <cstdlib>
#include <stdexcept>
#include <string>

namespace lelek {

/// Raised when a configured resource cap is hit. Always means "inconclusive",
/// never a mathematical answer.
struct CapExceeded : std::runtime_error {
    explicit CapExceeded(const std::string& what) : std::runtime_error(what) {}
};

struct Caps {
    std::size_t intervals = 4096;                 // components per IntervalUnion
    std::size_t arcs = 65536;                     // arcs per enumeration
    unsigned long long shadow_nodes = 20'000'000; // branch nodes in shadow search
    unsigned long long witness_search = 2'000'000; // exponent candidates per witness hunt
};

namespace detail {
inline unsigned long long env_ull(const char* name, unsigned long long fallback) {
    const char* v = std::getenv(name);
    if (!v || !*v) return fallback;
    return std::strtoull(v, nullptr, 10);
}
}  // namespace detail

/// Process-wide caps. Overridable through LELEK_MAX_INTERVALS, LELEK_MAX_ARCS,
/// LELEK_MAX_SHADOW_NODES, LELEK_MAX_WITNESS_SEARCH.
inline Caps& caps() {
    static Caps c = [] {
        Caps init;
        init.intervals = static_cast<std::size_t>(detail::env_ull("LELEK_MAX_INTERVALS", init.intervals));
        init.arcs = static_cast<std::size_t>(detail::env_ull("LELEK_MAX_ARCS", init.arcs));
        init.shadow_nodes = detail::env_ull("LELEK_MAX_SHADOW_NODES", init.shadow_nodes);
        init.witness_search = detail::env_ull("LELEK_MAX_WITNESS_SEARCH", init.witness_search);
        return init;
    }();
    return c;
}

}  // namespace lelek
