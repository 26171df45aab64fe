#include "bethe/varid.hpp"

#include <cstdlib>

namespace bethe {

std::string var_name(VarId v) {
    switch (v.kind()) {
        case VarKind::Q: return "q";
        case VarKind::D0: return "D0";
        case VarKind::X: return "x";
        case VarKind::Z: return "z";
        case VarKind::U: return "u";
        case VarKind::H: return "h";
        case VarKind::Xi: return "xi_" + std::to_string(v.index());
        case VarKind::Zj: return "z_" + std::to_string(v.index());
        case VarKind::Qk: return "Q_" + std::to_string(v.index());
    }
    throw std::logic_error("unknown variable kind");
}

VarId var_from_name(const std::string& name) {
    if (name == "q") return var::q;
    if (name == "D0") return var::D0;
    if (name == "x") return var::x;
    if (name == "z") return var::z;
    if (name == "u") return var::u;
    if (name == "h") return var::h;
    auto indexed = [&](const std::string& prefix) -> long {
        if (name.size() <= prefix.size() || name.compare(0, prefix.size(), prefix) != 0) return -1;
        const std::string tail = name.substr(prefix.size());
        if (tail.find_first_not_of("0123456789") != std::string::npos) return -1;
        return std::strtol(tail.c_str(), nullptr, 10);
    };
    if (long k = indexed("xi_"); k >= 0) return var::xi(static_cast<uint16_t>(k));
    if (long j = indexed("z_"); j >= 0) return var::zj(static_cast<uint16_t>(j));
    if (long k = indexed("Q_"); k >= 0) return var::Qk(static_cast<uint16_t>(k));
    throw std::invalid_argument("variable not in registry: " + name);
}

}  // namespace bethe
