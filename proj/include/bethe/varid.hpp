#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace bethe {

// The variable universe is a fixed, closed registry: the deformation
// parameter q, spectral parameters x and z, the classical variable u, the
// expansion variable h, the trace constant D0, inhomogeneities xi_k
// (xi_0 is reserved for the boundary parameter of the local reflection
// solution), Yangian parameters z_j, and cyclotomic parameters Q_k.
// VarId values are plain integers, so the registry is immutable by
// construction and safe to share between threads.
enum class VarKind : uint8_t {
    Q = 0,   // q
    D0 = 1,  // trace normalization Tr(1)
    X = 2,   // spectral parameter
    Z = 3,   // second spectral parameter
    U = 4,   // u = x + 1/x
    H = 5,   // q = e^h expansion variable
    Xi = 6,  // xi_k, k >= 0 (xi_0 = boundary parameter)
    Zj = 7,  // Yangian z_j, j >= 1
    Qk = 8,  // Ariki-Koike Q_k, k >= 1
};

struct VarId {
    uint16_t raw = 0;  // kind << 12 | index

    constexpr VarId() = default;
    constexpr VarId(VarKind kind, uint16_t index = 0)
        : raw(static_cast<uint16_t>((static_cast<uint16_t>(kind) << 12) | (index & 0x0fff))) {}

    constexpr VarKind kind() const { return static_cast<VarKind>(raw >> 12); }
    constexpr uint16_t index() const { return raw & 0x0fff; }

    friend constexpr bool operator==(VarId a, VarId b) { return a.raw == b.raw; }
    friend constexpr bool operator!=(VarId a, VarId b) { return a.raw != b.raw; }
    friend constexpr bool operator<(VarId a, VarId b) { return a.raw < b.raw; }
};

namespace var {
inline constexpr VarId q{VarKind::Q};
inline constexpr VarId D0{VarKind::D0};
inline constexpr VarId x{VarKind::X};
inline constexpr VarId z{VarKind::Z};
inline constexpr VarId u{VarKind::U};
inline constexpr VarId h{VarKind::H};
inline constexpr VarId xi(uint16_t k) { return VarId(VarKind::Xi, k); }
inline constexpr VarId zj(uint16_t j) { return VarId(VarKind::Zj, j); }
inline constexpr VarId Qk(uint16_t k) { return VarId(VarKind::Qk, k); }
}  // namespace var

std::string var_name(VarId v);
VarId var_from_name(const std::string& name);

}  // namespace bethe
