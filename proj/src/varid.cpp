#include "abeltrace/varid.hpp"

#include "abeltrace/errors.hpp"

#include <cctype>

namespace abeltrace {

int var_slot(const VarId& v, int n) {
    switch (v.kind) {
        case VarId::Kind::X: return v.index - 1;
        case VarId::Kind::Y: return n;
        case VarId::Kind::A: return n + v.index;
        case VarId::Kind::B: return 2 * n + v.index;
    }
    return -1;
}

VarId var_from_slot(int slot, int n) {
    if (slot < n) return VarId::x(slot + 1);
    if (slot == n) return VarId::y();
    if (slot <= 2 * n) return VarId::a(slot - n);
    return VarId::b(slot - 2 * n);
}

std::string var_name(const VarId& v) {
    switch (v.kind) {
        case VarId::Kind::X: return "x" + std::to_string(v.index);
        case VarId::Kind::Y: return "y";
        case VarId::Kind::A: return "a" + std::to_string(v.index);
        case VarId::Kind::B: return "b" + std::to_string(v.index);
    }
    return "?";
}

std::string slot_name(int slot, int n) { return var_name(var_from_slot(slot, n)); }

int slot_from_name(const std::string& name, int n) {
    if (name == "y") return n;
    if (name.size() < 2)
        throw SyntaxError("unknown variable '" + name + "'");
    char head = name[0];
    if (head != 'x' && head != 'a' && head != 'b')
        throw SyntaxError("unknown variable '" + name + "'");
    for (size_t i = 1; i < name.size(); ++i)
        if (!std::isdigit(static_cast<unsigned char>(name[i])))
            throw SyntaxError("unknown variable '" + name + "'");
    int idx = 0;
    try {
        idx = std::stoi(name.substr(1));
    } catch (...) {
        throw SyntaxError("unknown variable '" + name + "'");
    }
    if (idx < 1 || idx > n)
        throw UnknownVariable("variable '" + name + "' out of range for n = " +
                              std::to_string(n));
    VarId v = head == 'x' ? VarId::x(idx) : head == 'a' ? VarId::a(idx) : VarId::b(idx);
    return var_slot(v, n);
}

} // namespace abeltrace
