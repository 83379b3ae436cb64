#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>

namespace dicell {

using bigint = boost::multiprecision::cpp_int;
using bigrat = boost::multiprecision::cpp_rational;

inline bool is_integral(const bigrat& r) { return denominator(r) == 1; }

// Base class for all structured failures raised by the engine.
struct error : std::runtime_error {
    explicit error(const std::string& what) : std::runtime_error(what) {}
};

struct self_loop_error : error {
    explicit self_loop_error(const std::string& v) : error("self loop at vertex " + v) {}
};
struct unknown_vertex_error : error {
    explicit unknown_vertex_error(const std::string& v) : error("unknown vertex " + v) {}
};
struct cap_exceeded_error : error {
    explicit cap_exceeded_error(const std::string& what) : error(what) {}
};
struct bad_jump_error : error {
    explicit bad_jump_error(const std::string& what) : error(what) {}
};
struct not_digraph_map_error : error {
    not_digraph_map_error() : error("assignment is not a digraph map") {}
};
struct non_integer_chain_error : error {
    non_integer_chain_error() : error("chain has non-integer coefficients") {}
};
struct not_in_omega_error : error {
    explicit not_in_omega_error(const std::string& what) : error(what) {}
};
struct not_closed_error : error {
    int degree;
    not_closed_error(int deg, const std::string& witness)
        : error("span not closed under boundary at degree " + std::to_string(deg) +
                ", witness " + witness),
          degree(deg) {}
};
struct not_decomposable_error : error {
    explicit not_decomposable_error(const std::string& what) : error(what) {}
};
struct boundary_escapes_span_error : error {
    explicit boundary_escapes_span_error(const std::string& what) : error(what) {}
};
struct parse_error : error {
    int line;
    parse_error(int line_no, const std::string& reason)
        : error("parse error at line " + std::to_string(line_no) + ": " + reason),
          line(line_no) {}
};
struct unknown_fixture_error : error {
    explicit unknown_fixture_error(const std::string& id) : error("unknown fixture " + id) {}
};
struct budget_exceeded_error : error {
    std::uint64_t partial;
    explicit budget_exceeded_error(std::uint64_t partial_count)
        : error("search budget exceeded after " + std::to_string(partial_count) + " nodes"),
          partial(partial_count) {}
};

// Node-count budget shared by the backtracking searches. `spend` throws once
// the cap is hit; a zero cap means unlimited.
struct search_budget {
    std::uint64_t cap = 0;
    std::uint64_t spent = 0;

    void spend(std::uint64_t n = 1) {
        spent += n;
        if (cap != 0 && spent > cap) throw budget_exceeded_error(spent);
    }
    bool exhausted() const { return cap != 0 && spent >= cap; }
};

}  // namespace dicell
