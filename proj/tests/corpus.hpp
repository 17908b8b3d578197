#pragma once

#include <string>
#include <vector>

#include "hopfexp/constructions.hpp"

namespace hopfexp::corpus {

inline FieldDescriptor Q() { return FieldDescriptor::rational(); }
inline FieldDescriptor Qz3() { return FieldDescriptor::cyclotomic(3); }
inline FieldDescriptor F3() { return FieldDescriptor::prime_field(3); }
inline FieldDescriptor F5() { return FieldDescriptor::prime_field(5); }
inline FieldDescriptor F7() { return FieldDescriptor::prime_field(7); }

struct Entry {
    std::string name;
    HopfAlgebra h;
};

/// group algebras, duals, H4 over Q and F3, T_3(q) over Q(zeta_3) and F7
inline std::vector<Entry> standard() {
    std::vector<Entry> out;
    out.push_back({"Q[Z6]", group_algebra(FiniteGroupTable::cyclic(6), Q())});
    out.push_back({"Q[S3]", group_algebra(FiniteGroupTable::symmetric3(), Q())});
    out.push_back({"Q[Z2xZ2]", group_algebra(FiniteGroupTable::klein4(), Q())});
    out.push_back({"F5[Z4]", group_algebra(FiniteGroupTable::cyclic(4), F5())});
    out.push_back({"dual Q[Z6]", dual_group_algebra(FiniteGroupTable::cyclic(6), Q())});
    out.push_back({"dual Q[S3]", dual_group_algebra(FiniteGroupTable::symmetric3(), Q())});
    out.push_back({"dual F5[Z4]", dual_group_algebra(FiniteGroupTable::cyclic(4), F5())});
    out.push_back({"H4/Q", sweedler_h4(Q())});
    out.push_back({"H4/F3", sweedler_h4(F3())});
    out.push_back({"taft3/Qz3", taft(3, Qz3())});
    out.push_back({"taft3/F7", taft(3, F7())});
    return out;
}

}  // namespace hopfexp::corpus
