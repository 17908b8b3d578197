#pragma once

#include "hopfexp/hopf.hpp"

namespace hopfexp {

/// Finite group as a Cayley table of indices; validated exhaustively.
struct FiniteGroupTable {
    std::int64_t order = 0;
    std::vector<int> table;  // table[i*order + j] = index of g_i g_j
    int identity_index = 0;

    int at(int i, int j) const { return table[static_cast<std::size_t>(i) * order + j]; }
    int inverse(int i) const;
    void validate() const;  // Errc::InvalidGroupTable with a failing triple
    std::int64_t exponent() const;

    static FiniteGroupTable cyclic(std::int64_t n);
    static FiniteGroupTable klein4();
    static FiniteGroupTable symmetric3();
    /// named tables: "z1".."z99", "z2x2", "s3"
    static FiniteGroupTable named(const std::string& name);
};

HopfAlgebra group_algebra(const FiniteGroupTable& g, const FieldDescriptor& f);
HopfAlgebra dual_group_algebra(const FiniteGroupTable& g, const FieldDescriptor& f);

/// Taft algebra T_n(q), q a primitive n-th root of unity in F; taft(2, .) is
/// Sweedler's 4-dimensional algebra. Errc::NoPrimitiveRoot when F lacks q.
HopfAlgebra taft(std::int64_t n, const FieldDescriptor& f);

HopfAlgebra sweedler_h4(const FieldDescriptor& f);

}  // namespace hopfexp
