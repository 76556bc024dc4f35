#pragma once

#include <string>

namespace abeltrace {

// Variables of the ambient problem: affine coordinates x_1..x_n, y and the
// line parameters a_1..a_n, b_1..b_n. The fixed global order is
// x_1 < ... < x_n < y < a_1 < ... < a_n < b_1 < ... < b_n;
// `slot` is the position of a variable in that order (0-based), so exponent
// vectors have length 3n+1 and slot order *is* the variable order.
struct VarId {
    enum class Kind { X, Y, A, B };
    Kind kind;
    int index; // 1-based for X/A/B, ignored for Y

    static VarId x(int i) { return {Kind::X, i}; }
    static VarId y() { return {Kind::Y, 0}; }
    static VarId a(int i) { return {Kind::A, i}; }
    static VarId b(int i) { return {Kind::B, i}; }

    bool operator==(const VarId&) const = default;
};

inline int var_count(int n) { return 3 * n + 1; }

int var_slot(const VarId& v, int n);
VarId var_from_slot(int slot, int n);
std::string var_name(const VarId& v);
std::string slot_name(int slot, int n);

// Maps "x3", "y", "a1", "b2" to a slot. Throws UnknownVariable when the
// index is out of range for the given n, SyntaxError for anything else.
int slot_from_name(const std::string& name, int n);

} // namespace abeltrace
