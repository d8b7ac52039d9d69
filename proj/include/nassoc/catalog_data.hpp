#pragma once

// Built-in catalog data. Algebra tables use the .alg format, degeneration
// rows the .deg format; see formats.md for the grammar.

#include <string>
#include <vector>

namespace nassoc::data {

inline const std::vector<std::string>& algebra_texts()
{
    static const std::vector<std::string> texts = {
    R"ALG(id: A01
source: commutative associative classification
dim: 3
symmetry: commutative
tags: commutative, associative, jordan, perm, right-alternative, semi-alternative, assosymmetric, minus-one-one, lie-admissible
e1 e1 = e1
e2 e2 = e2
)ALG",
    R"ALG(id: A02
source: commutative associative classification
dim: 3
symmetry: commutative
tags: commutative, associative, jordan, perm, right-alternative, semi-alternative, assosymmetric, minus-one-one, lie-admissible
e1 e1 = e1
e1 e2 = e2
)ALG",
    R"ALG(id: A03
source: commutative associative classification
dim: 3
symmetry: commutative
tags: commutative, associative, jordan, perm, right-alternative, semi-alternative, assosymmetric, minus-one-one, lie-admissible
e1 e1 = e1
)ALG",
    R"ALG(id: A04
source: commutative associative classification
dim: 3
symmetry: commutative
tags: commutative, associative, jordan, perm, right-alternative, semi-alternative, assosymmetric, minus-one-one, lie-admissible
e1 e1 = e2
)ALG",
    R"ALG(id: A05
source: commutative associative classification
dim: 3
symmetry: commutative
tags: commutative, associative, jordan, perm, right-alternative, semi-alternative, assosymmetric, minus-one-one, lie-admissible
e1 e2 = e3
)ALG",
    R"ALG(id: A06
source: commutative associative classification
dim: 3
symmetry: commutative
tags: commutative, associative, jordan, perm, right-alternative, semi-alternative, assosymmetric, minus-one-one, lie-admissible
e1 e1 = e2
e1 e2 = e3
)ALG",
    R"ALG(id: A07
source: commutative associative classification
dim: 3
symmetry: commutative
tags: commutative, associative, jordan, perm, right-alternative, semi-alternative, assosymmetric, minus-one-one, lie-admissible
e1 e1 = e1
e2 e2 = e2
e3 e3 = e3
)ALG",
    R"ALG(id: A08
source: commutative associative classification
dim: 3
symmetry: commutative
tags: commutative, associative, jordan, perm, right-alternative, semi-alternative, assosymmetric, minus-one-one, lie-admissible
e1 e1 = e1
e2 e2 = e2
e2 e3 = e3
)ALG",
    R"ALG(id: A09
source: commutative associative classification
dim: 3
symmetry: commutative
tags: commutative, associative, jordan, perm, right-alternative, semi-alternative, assosymmetric, minus-one-one, lie-admissible
e1 e1 = e1
e1 e2 = e2
e1 e3 = e3
)ALG",
    R"ALG(id: A10
source: commutative associative classification
dim: 3
symmetry: commutative
tags: commutative, associative, jordan, perm, right-alternative, semi-alternative, assosymmetric, minus-one-one, lie-admissible
e1 e1 = e1
e1 e2 = e2
e1 e3 = e3
e2 e2 = e3
)ALG",
    R"ALG(id: A11
source: commutative associative classification
dim: 3
symmetry: commutative
tags: commutative, associative, jordan, perm, right-alternative, semi-alternative, assosymmetric, minus-one-one, lie-admissible
e1 e1 = e1
e2 e2 = e3
)ALG",
    R"ALG(id: J12
source: Jordan classification
dim: 3
symmetry: commutative
tags: commutative, jordan, !associative
e1 e1 = e1
e2 e2 = e2
e3 e3 = e1 + e2
e1 e3 = (1/2)*e3
e2 e3 = (1/2)*e3
)ALG",
    R"ALG(id: J13
source: Jordan classification
dim: 3
symmetry: commutative
tags: commutative, jordan, !associative
e1 e1 = e1
e1 e2 = (1/2)*e2
e1 e3 = e3
)ALG",
    R"ALG(id: J14
source: Jordan classification
dim: 3
symmetry: commutative
tags: commutative, jordan, !associative
e1 e1 = e1
e1 e2 = (1/2)*e2
e1 e3 = (1/2)*e3
)ALG",
    R"ALG(id: J15
source: Jordan classification
dim: 3
symmetry: commutative
tags: commutative, jordan, !associative
e1 e1 = e1
e2 e2 = e3
e1 e2 = (1/2)*e2
)ALG",
    R"ALG(id: J16
source: Jordan classification
dim: 3
symmetry: commutative
tags: commutative, jordan, !associative
e1 e1 = e1
e2 e2 = e3
e1 e2 = (1/2)*e2
e1 e3 = e3
)ALG",
    R"ALG(id: J17
source: Jordan classification
dim: 3
symmetry: commutative
tags: commutative, jordan, !associative
e1 e1 = e1
e2 e2 = e2
e1 e3 = (1/2)*e3
e2 e3 = (1/2)*e3
)ALG",
    R"ALG(id: J18
source: Jordan classification
dim: 3
symmetry: commutative
tags: commutative, jordan, !associative
e1 e1 = e1
e1 e2 = (1/2)*e2
)ALG",
    R"ALG(id: J19
source: Jordan classification
dim: 3
symmetry: commutative
tags: commutative, jordan, !associative
e1 e1 = e1
e2 e2 = e2
e1 e3 = (1/2)*e3
)ALG",
    R"ALG(id: R00
source: right alternative classification
dim: 3
tags: right-alternative
e1 e2 = e3
e2 e1 = -e3
)ALG",
    R"ALG(id: R01
source: right alternative classification
dim: 3
tags: right-alternative
e1 e1 = e2
e1 e3 = e2
e3 e1 = -e2
)ALG",
    R"ALG(id: R02
source: right alternative classification
dim: 3
param: alpha
constraint: alpha != 0
tags: right-alternative
e1 e2 = (alpha + 1)*e3
e2 e1 = (1 - alpha)*e3
)ALG",
    R"ALG(id: R03
source: right alternative classification
dim: 3
tags: right-alternative
e1 e1 = e1
e1 e2 = e2
e1 e3 = e3
e3 e1 = e3
)ALG",
    R"ALG(id: R04
source: right alternative classification
dim: 3
tags: right-alternative
e1 e1 = e1
e1 e2 = e2 + e3
e1 e3 = e3
e2 e1 = -e3
e3 e1 = e3
)ALG",
    R"ALG(id: R05
source: right alternative classification
dim: 3
tags: right-alternative
e1 e1 = e1
e1 e3 = e3
e2 e1 = e2
e3 e1 = e3
)ALG",
    R"ALG(id: R06
source: right alternative classification
dim: 3
tags: right-alternative
e1 e1 = e1
e1 e2 = e2
e1 e3 = e3
)ALG",
    R"ALG(id: R07
source: right alternative classification
dim: 3
tags: right-alternative
e1 e1 = e1
e2 e1 = e2
e3 e1 = e3
)ALG",
    R"ALG(id: R08
source: right alternative classification
dim: 3
tags: right-alternative
e1 e1 = e1
e1 e3 = e3
e2 e1 = e2
)ALG",
    R"ALG(id: R09
source: right alternative classification
dim: 3
tags: right-alternative
e1 e1 = e1
e2 e1 = e2
e2 e2 = e3
)ALG",
    R"ALG(id: R10
source: right alternative classification
dim: 3
tags: right-alternative
e1 e1 = e1
e1 e2 = e2
e1 e3 = e3
e2 e2 = e3
e3 e1 = e3
)ALG",
    R"ALG(id: R11
source: right alternative classification
dim: 3
tags: right-alternative
e1 e1 = e1
e1 e3 = e3
e2 e2 = e2
e3 e2 = e3
)ALG",
    R"ALG(id: R12
source: right alternative classification
dim: 3
tags: right-alternative
e1 e1 = e1
e2 e1 = e2
)ALG",
    R"ALG(id: R13
source: right alternative classification
dim: 3
tags: right-alternative
e1 e1 = e1
e1 e2 = e3
e2 e1 = e2 - e3
)ALG",
    R"ALG(id: R14
source: right alternative classification
dim: 3
tags: right-alternative
e1 e1 = e1
e1 e2 = e2
)ALG",
    R"ALG(id: R15
source: right alternative classification
dim: 3
tags: right-alternative
e1 e1 = e1
e1 e3 = e3
e2 e2 = e2
)ALG",
    R"ALG(id: R16
source: right alternative classification
dim: 3
tags: right-alternative
e1 e1 = e1
e2 e2 = e2
e3 e1 = e3
)ALG",
    R"ALG(id: A12
source: associative classification
dim: 3
tags: associative, right-alternative, semi-alternative, assosymmetric, minus-one-one, lie-admissible, perm
e1 e2 = e3
e2 e1 = -e3
)ALG",
    R"ALG(id: A13
source: associative classification
dim: 3
tags: associative, right-alternative, semi-alternative, assosymmetric, minus-one-one, lie-admissible, perm
e1 e1 = e2
e1 e3 = e2
e3 e1 = -e2
)ALG",
    R"ALG(id: A14
source: associative classification
dim: 3
param: alpha
constraint: alpha != 0
tags: associative, right-alternative, semi-alternative, assosymmetric, minus-one-one, lie-admissible, perm
e1 e2 = (alpha + 1)*e3
e2 e1 = (1 - alpha)*e3
)ALG",
    R"ALG(id: A15
source: associative classification
dim: 3
tags: associative, right-alternative, semi-alternative, assosymmetric, minus-one-one, lie-admissible, !perm
e1 e1 = e1
e1 e2 = e2
e1 e3 = e3
e3 e1 = e3
)ALG",
    R"ALG(id: A16
source: associative classification
dim: 3
tags: associative, right-alternative, semi-alternative, assosymmetric, minus-one-one, lie-admissible, perm
e1 e1 = e1
e1 e3 = e3
e2 e1 = e2
e3 e1 = e3
)ALG",
    R"ALG(id: A17
source: associative classification
dim: 3
tags: associative, right-alternative, semi-alternative, assosymmetric, minus-one-one, lie-admissible, !perm
e1 e1 = e1
e1 e2 = e2
e1 e3 = e3
)ALG",
    R"ALG(id: A18
source: associative classification
dim: 3
tags: associative, right-alternative, semi-alternative, assosymmetric, minus-one-one, lie-admissible, perm
e1 e1 = e1
e2 e1 = e2
e3 e1 = e3
)ALG",
    R"ALG(id: A19
source: associative classification
dim: 3
tags: associative, right-alternative, semi-alternative, assosymmetric, minus-one-one, lie-admissible, !perm
e1 e1 = e1
e1 e3 = e3
e2 e1 = e2
)ALG",
    R"ALG(id: A20
source: associative classification
dim: 3
tags: associative, right-alternative, semi-alternative, assosymmetric, minus-one-one, lie-admissible, !perm
e1 e1 = e1
e1 e3 = e3
e2 e2 = e2
e3 e2 = e3
)ALG",
    R"ALG(id: A21
source: associative classification
dim: 3
tags: associative, right-alternative, semi-alternative, assosymmetric, minus-one-one, lie-admissible, perm
e1 e1 = e1
e2 e1 = e2
)ALG",
    R"ALG(id: A22
source: associative classification
dim: 3
tags: associative, right-alternative, semi-alternative, assosymmetric, minus-one-one, lie-admissible, !perm
e1 e1 = e1
e1 e2 = e2
)ALG",
    R"ALG(id: A23
source: associative classification
dim: 3
tags: associative, right-alternative, semi-alternative, assosymmetric, minus-one-one, lie-admissible, !perm
e1 e1 = e1
e1 e3 = e3
e2 e2 = e2
)ALG",
    R"ALG(id: A24
source: associative classification
dim: 3
tags: associative, right-alternative, semi-alternative, assosymmetric, minus-one-one, lie-admissible, perm
e1 e1 = e1
e2 e2 = e2
e3 e1 = e3
)ALG",
    R"ALG(id: L01
source: Malcev classification
dim: 3
symmetry: anticommutative
tags: anticommutative, lie, malcev
e1 e2 = e3
)ALG",
    R"ALG(id: L02
source: Malcev classification
dim: 3
symmetry: anticommutative
tags: anticommutative, lie, malcev
e1 e2 = e2
e1 e3 = e2 + e3
)ALG",
    R"ALG(id: L03
source: Malcev classification
dim: 3
symmetry: anticommutative
param: alpha
tags: anticommutative, lie, malcev
e1 e2 = e2
e1 e3 = (alpha)*e3
)ALG",
    R"ALG(id: L04
source: Malcev classification
dim: 3
symmetry: anticommutative
tags: anticommutative, lie, malcev
e1 e2 = e3
e1 e3 = -2*e1
e2 e3 = 2*e2
)ALG",
    R"ALG(id: S01
source: semi-alternative classification
dim: 3
param: alpha
tags: semi-alternative, assosymmetric, lie-admissible, !associative
e1 e1 = e2
e1 e2 = (alpha + 1)*e3
e2 e1 = (alpha - 1)*e3
)ALG",
    R"ALG(id: S02
source: semi-alternative classification
dim: 3
tags: semi-alternative, assosymmetric, lie-admissible, !associative
e1 e1 = 2*e1 + e2
e1 e2 = 2*e2
e3 e1 = 2*e3
)ALG",
    R"ALG(id: S03
source: semi-alternative classification
dim: 3
tags: semi-alternative, assosymmetric, lie-admissible, !associative
e1 e1 = 2*e1 + e2 + e3
e1 e2 = 2*e2
e3 e1 = 2*e3
)ALG",
    R"ALG(id: S04
source: semi-alternative classification
dim: 3
tags: semi-alternative, assosymmetric, lie-admissible, !associative
e1 e1 = 2*e1 + e3
e1 e2 = 2*e2
e3 e1 = 2*e3
)ALG",
    R"ALG(id: S05
source: semi-alternative classification
dim: 3
tags: semi-alternative, assosymmetric, lie-admissible, !associative
e1 e1 = 2*e1 + e2
e2 e1 = 2*e2
e1 e3 = 2*e3
e3 e1 = 2*e3
)ALG",
    R"ALG(id: S06
source: semi-alternative classification
dim: 3
tags: semi-alternative, assosymmetric, lie-admissible, !associative
e1 e1 = 2*e1 + e2
e2 e1 = 2*e2
e3 e3 = e3
)ALG",
    R"ALG(id: S07
source: semi-alternative classification
dim: 3
tags: semi-alternative, assosymmetric, lie-admissible, !associative
e1 e1 = 2*e1 + e2
e2 e1 = 2*e2
)ALG",
    R"ALG(id: S08
source: semi-alternative classification
dim: 3
tags: semi-alternative, assosymmetric, lie-admissible, !associative
e1 e1 = 2*e1 + e2
e1 e2 = 2*e2
e1 e3 = 2*e3
e3 e1 = 2*e3
)ALG",
    R"ALG(id: S09
source: semi-alternative classification
dim: 3
tags: semi-alternative, assosymmetric, lie-admissible, !associative
e1 e1 = 2*e1 + e2
e1 e2 = 2*e2
e3 e3 = e3
)ALG",
    R"ALG(id: S10
source: semi-alternative classification
dim: 3
tags: semi-alternative, assosymmetric, lie-admissible, !associative
e1 e1 = 2*e1 + e2
e1 e2 = 2*e2
)ALG",
    R"ALG(id: S11
source: semi-alternative classification
dim: 3
tags: semi-alternative, assosymmetric, lie-admissible, !associative
e1 e1 = e2 + e3
e1 e2 = e2
e2 e1 = -e2
e1 e3 = e1
e3 e1 = e1
e2 e3 = e2
e3 e2 = e2
e3 e3 = e3
)ALG",
    R"ALG(id: S12
source: semi-alternative classification
dim: 3
tags: semi-alternative, assosymmetric, lie-admissible, !associative
e1 e1 = 2*e1 + e2
e1 e2 = 2*e2
e1 e3 = 2*e3
)ALG",
    R"ALG(id: S13
source: semi-alternative classification
dim: 3
tags: semi-alternative, assosymmetric, lie-admissible, !associative
e1 e1 = 2*e1 + e2
e2 e1 = 2*e2
e3 e1 = 2*e3
)ALG",
    R"ALG(id: B1
source: non-Lie binary Lie classification
dim: 4
symmetry: anticommutative
param: alpha
constraint: alpha != 2
tags: anticommutative, binary-lie, !lie
e1 e2 = e2
e1 e3 = e3
e1 e4 = (alpha)*e4
e2 e3 = e4
)ALG",
    R"ALG(id: B2
source: non-Lie binary Lie classification
dim: 4
symmetry: anticommutative
tags: anticommutative, binary-lie, !lie
e1 e2 = e3
e3 e4 = e3
)ALG",
    R"ALG(id: M
source: non-Lie Malcev algebra
dim: 4
symmetry: anticommutative
tags: anticommutative, malcev, !lie
e1 e2 = e3
e1 e4 = e1
e2 e4 = e2
e3 e4 = -e3
)ALG",
    R"ALG(id: BB01
source: non-(-1,1) binary (-1,1) classification
dim: 4
tags: right-alternative, binary-minus-one-one, !lie-admissible, !minus-one-one
e1 e1 = 2*e1
e1 e2 = 2*e2
e1 e3 = 2*e3
e1 e4 = 2*e4
e4 e1 = 2*e4
e2 e3 = e4
e3 e2 = -e4
e3 e3 = -e4
)ALG",
    R"ALG(id: BB02
source: non-(-1,1) binary (-1,1) classification
dim: 4
param: alpha
tags: right-alternative, binary-minus-one-one, !lie-admissible, !minus-one-one
e1 e1 = 2*e1
e1 e2 = 2*e2
e1 e3 = 2*e3
e1 e4 = 2*e4
e4 e1 = 2*e4
e2 e3 = (alpha + 1)*e4
e3 e2 = (alpha - 1)*e4
)ALG",
    R"ALG(id: BB03
source: non-(-1,1) binary (-1,1) classification
dim: 4
tags: right-alternative, binary-minus-one-one, !lie-admissible, !minus-one-one
e1 e1 = 2*e1
e1 e2 = 2*e2 + e4
e2 e1 = e4
e1 e3 = 2*e3
e1 e4 = 2*e4
e4 e1 = 2*e4
e2 e3 = 2*e4
)ALG",
    R"ALG(id: BB04
source: non-(-1,1) binary (-1,1) classification
dim: 4
tags: right-alternative, binary-minus-one-one, !lie-admissible, !minus-one-one
e1 e1 = 2*e1
e2 e1 = 2*e2
e3 e1 = 2*e3
e2 e3 = e4
e3 e2 = -e4
e3 e3 = -e4
)ALG",
    R"ALG(id: BB05
source: non-(-1,1) binary (-1,1) classification
dim: 4
param: alpha
tags: right-alternative, binary-minus-one-one, !lie-admissible, !minus-one-one
e1 e1 = 2*e1
e2 e1 = 2*e2
e3 e1 = 2*e3
e2 e3 = (alpha + 1)*e4
e3 e2 = (alpha - 1)*e4
)ALG",
    R"ALG(id: BB06
source: non-(-1,1) binary (-1,1) classification
dim: 4
tags: right-alternative, binary-minus-one-one, !lie-admissible, !minus-one-one
e1 e1 = 2*e1
e1 e2 = -e4
e2 e1 = 2*e2 - e4
e3 e1 = 2*e3
e2 e3 = 2*e4
)ALG",
    R"ALG(id: BB07
source: non-(-1,1) binary (-1,1) classification
dim: 4
tags: right-alternative, binary-minus-one-one, !lie-admissible, !minus-one-one
e1 e1 = 2*e1
e1 e2 = 2*e2
e1 e3 = 2*e3
e4 e1 = 2*e4
e2 e3 = e4
e3 e2 = -e4
)ALG",
    R"ALG(id: BB08
source: non-(-1,1) binary (-1,1) classification
dim: 4
tags: right-alternative, binary-minus-one-one, !lie-admissible, !minus-one-one
e1 e1 = 2*e1
e2 e1 = 2*e2
e3 e1 = 2*e3
e1 e4 = 2*e4
e2 e3 = e4
e3 e2 = -e4
)ALG",
    R"ALG(id: SS01
source: non-assosymmetric semi-alternative extensions of M
dim: 4
tags: semi-alternative, !assosymmetric
e1 e2 = e3
e2 e1 = -e3
e1 e4 = 2*e1
e2 e4 = 2*e2
e4 e3 = 2*e3
e4 e4 = 2*e4
)ALG",
    R"ALG(id: SS02
source: non-assosymmetric semi-alternative extensions of M
dim: 4
tags: semi-alternative, !assosymmetric
e1 e2 = e3
e2 e1 = -e3
e1 e4 = 2*e1
e2 e4 = 2*e2 + e3
e4 e2 = e3
e4 e3 = 2*e3
e4 e4 = -4*e1 + 2*e4
)ALG",
    R"ALG(id: SS03
source: non-assosymmetric semi-alternative extensions of M
dim: 4
tags: semi-alternative, !assosymmetric
e1 e2 = e3
e2 e1 = -e3
e1 e4 = 2*e1
e2 e4 = 2*e2
e4 e3 = 2*e3
e4 e4 = e3 + 2*e4
)ALG",
    R"ALG(id: SS04
source: non-assosymmetric semi-alternative extensions of M
dim: 4
tags: semi-alternative, !assosymmetric
e1 e2 = e3
e2 e1 = -e3
e4 e1 = -2*e1
e4 e2 = -2*e2
e3 e4 = -2*e3
e4 e4 = -2*e4
)ALG",
    R"ALG(id: SS05
source: non-assosymmetric semi-alternative extensions of M
dim: 4
tags: semi-alternative, !assosymmetric
e1 e2 = e3
e2 e1 = -e3
e4 e1 = -2*e1
e2 e4 = e3
e4 e2 = -2*e2 + e3
e3 e4 = -2*e3
e4 e4 = -4*e1 - 2*e4
)ALG",
    R"ALG(id: SS06
source: non-assosymmetric semi-alternative extensions of M
dim: 4
tags: semi-alternative, !assosymmetric
e1 e2 = e3
e2 e1 = -e3
e4 e1 = -2*e1
e4 e2 = -2*e2
e3 e4 = -2*e3
e4 e4 = e3 - 2*e4
)ALG",
    R"ALG(id: P4
source: binary perm example
dim: 4
tags: right-alternative, binary-perm, !associative, !perm
e1 e2 = 2*e4
e1 e3 = e2
e3 e1 = -e2
e3 e3 = e4
)ALG",
    R"ALG(id: R4
source: right alternative, not binary (-1,1)
dim: 4
tags: right-alternative, !binary-minus-one-one
e1 e2 = e3
e2 e1 = -e3
e3 e4 = 2*e3
e1 e4 = 2*e1
e4 e1 = 2*e1
e2 e4 = 2*e2
e4 e2 = 2*e2
e4 e4 = 2*e4
)ALG",
    };
    return texts;
}

inline const std::vector<std::string>& degeneration_texts()
{
    static const std::vector<std::string> texts = {
    R"DEG(source: catalog:A13
target: catalog:A12
note: perm
E1 = t*e1
E2 = e2 + e3
E3 = -t*e3
)DEG",
    R"DEG(source: catalog:A14
target: catalog:A13
note: perm
index: alpha = -i/t
E1 = t*e1 + t*e2 - 4/t^2*e3
E2 = t^5*e2
E3 = -i*t^2*e1 + i*t^2*e2
)DEG",
    R"DEG(source: catalog:A24
target: catalog:A16
note: perm
E1 = e1 + e2
E2 = t^2*e2 + e3
E3 = t*e1
)DEG",
    R"DEG(source: catalog:A24
target: catalog:A21
note: perm
E1 = e1
E2 = e3
E3 = t*e2
)DEG",
    R"DEG(source: catalog:A23
target: catalog:A15
note: associative
E1 = e1 + e2
E2 = e3
E3 = t*e2
)DEG",
    R"DEG(source: catalog:A23
target: catalog:A22
note: associative
E1 = e1
E2 = e3
E3 = t*e2
)DEG",
    R"DEG(source: catalog:R10
target: catalog:R04
note: right-alternative
E1 = e1 + e2 - e3
E2 = t*e2 - 2*t*e3
E3 = t*e3
)DEG",
    R"DEG(source: catalog:R09
target: catalog:R13
note: right-alternative
E1 = e1 + e2 + e3
E2 = t*e2 + 2*t*e3
E3 = t*e3
)DEG",
    R"DEG(source: catalog:R09
target: catalog:A14
note: right-alternative
param: alpha
target-param: alpha = alpha
E1 = t*e1 + (1 + alpha)/t*e2 + (1 + alpha)^2/t^3*e3
E2 = t*e2 + 2*alpha/t*e3
E3 = e3
)DEG",
    R"DEG(source: catalog:S01
target: catalog:A14
note: semi-alternative
param: alpha
index: alpha = 1/alpha
target-param: alpha = alpha
E1 = alpha*t*e1 + t*e2
E2 = e2
E3 = t*e3
)DEG",
    R"DEG(source: catalog:S03
target: catalog:A19
note: semi-alternative; the limit is A19 with e2 and e3 exchanged
relabel: e1
relabel: e3
relabel: e2
E1 = 1/2*e1
E2 = 1/t*e2
E3 = 1/t*e3
)DEG",
    R"DEG(source: catalog:S09
target: catalog:A23
note: semi-alternative
E1 = 1/2*e1
E2 = e3
E3 = 1/t*e2
)DEG",
    R"DEG(source: catalog:S06
target: catalog:A24
note: semi-alternative
E1 = 1/2*e1
E2 = e3
E3 = 1/t*e2
)DEG",
    R"DEG(source: catalog:S03
target: catalog:S02
note: semi-alternative
E1 = e1
E2 = e2
E3 = 1/t*e3
)DEG",
    R"DEG(source: catalog:S03
target: catalog:S04
note: semi-alternative
E1 = e1
E2 = 1/t*e2 + t/(t^2 - 2)*e3
E3 = 2/(2 - t^2)*e3
)DEG",
    R"DEG(source: catalog:S06
target: catalog:S05
note: semi-alternative
E1 = e1 + 2*e3
E2 = e2 + t^2*e3
E3 = t*e3
)DEG",
    R"DEG(source: catalog:S06
target: catalog:S07
note: semi-alternative
E1 = e1
E2 = e2
E3 = t*e3
)DEG",
    R"DEG(source: catalog:S09
target: catalog:S08
note: semi-alternative
E1 = e1 + 2*e3
E2 = e2
E3 = t*e3
)DEG",
    R"DEG(source: catalog:S09
target: catalog:S10
note: semi-alternative
E1 = e1
E2 = e2
E3 = t*e3
)DEG",
    R"DEG(source: catalog:S12
target: catalog:A17
note: semi-alternative
E1 = 1/2*e1
E2 = 1/t*e2
E3 = e3
)DEG",
    R"DEG(source: catalog:S13
target: catalog:A18
note: semi-alternative
E1 = 1/2*e1
E2 = 1/t*e2
E3 = e3
)DEG",
    R"DEG(source: catalog:S11
target: catalog:A20
note: semi-alternative
E1 = 1/2*e1 + 1/8*e2 + 1/2*e3
E2 = -1/2*e1 + 1/4*e2 + 1/2*e3
E3 = 3/(8*t)*e2
)DEG",
    R"DEG(source: catalog:S11
target: catalog:S01
note: semi-alternative
param: alpha
target-param: alpha = alpha
E1 = t/(1 + alpha)*e1 + alpha*t/(1 + alpha)*e3
E2 = t^2/(1 + alpha)^2*e2 + (1 - alpha)*t^2/(1 + alpha)*e3
E3 = t^3/(1 + alpha)^3*e2
)DEG",
    };
    return texts;
}

// Closed-set certificates. Equations are polynomials in the structure
// constants, written cIJK for c_{IJ}^K; each must vanish. Flags are
// "p q r" for A_p A_q in A_r, with r = dim+1 meaning A_p A_q = 0.
struct CertificateText {
    std::string id;
    std::string note;
    std::vector<std::string> equations;
    std::vector<std::string> flags;
    // members: "ID", "ID | relabel rows" or "opposite ID | relabel rows"
    std::vector<std::string> members;
    std::vector<std::string> non_members;  // "ID" or "ID:alpha=2"
};

inline const std::vector<CertificateText>& certificate_texts()
{
    static const std::vector<CertificateText> certs = {
        {"perm-A24", "perm",
         {"c223*c113 - c123*c213"},
         {"3 3 4", "3 1 3", "2 1 2"},
         {"A24"},
         {"A14:alpha=2"}},
        {"assoc-A20", "associative",
         {"c122 - c212", "c212 - c313", "c213", "c223"},
         {"1 2 2", "2 1 2", "1 3 3", "3 1 3", "2 3 4"},
         {"A20"},
         {"A14:alpha=2", "A19"}},
        {"assoc-A23", "associative",
         {"c113*c223 - c123*c213", "c122 - c212", "c111 - c133"},
         {"1 2 2", "2 1 2", "1 3 3", "3 1 3", "3 3 4"},
         {"A23"},
         {"A14:alpha=2", "A19"}},
        {"ra-R09", "right-alternative",
         {"c111 - c212", "c112", "c211", "c333"},
         {"1 2 3"},
         {"R09"},
         {"A19", "A20", "A23", "A24"}},
        {"ra-R10", "right-alternative",
         {"c111 - c122", "c111 - c133", "c111 - c313"},
         {"2 1 3", "3 2 4"},
         {"R10"},
         {"A19", "A20", "A23", "A24"}},
        {"semialt-S11", "semi-alternative",
         {"c222 + c211", "2*c222*c112 - c133^2 - c313^2"},
         {"3 3 4", "3 1 3"},
         {"S11 | e1; e3; e2"},
         {"S03"}},
        {"semialt-S06", "semi-alternative",
         {"c122 - c212"},
         {"1 2 2", "2 1 2"},
         {"S06 | e3; e1; e2", "opposite S09 | e3; e1; e2"},
         {"S12", "S13"}},
    };
    return certs;
}

// Orbit computations from the classification proofs. Cocycles are lists
// "k i j = c" (c times Delta_ij added to component k), matrices are rows
// separated by ';'. An empty phi means the step only checks the extension.
struct ReplayText {
    std::string id;
    std::string base;    // "ID" or "ID:alpha=value"
    bool skew;           // skew forms over a Jordan base, symmetric over a Malcev base
    std::string theta;
    std::string phi;
    std::string expected;
    bool automorphism = true;  // false: the printed phi must be rejected
    std::string target;        // "ID", "ID:alpha=expr" or empty
    std::string target_map;    // homomorphism extension -> target, empty for equality
};

inline const std::vector<ReplayText>& replay_texts()
{
    static const std::string flip3 = "-1,0,0; 0,1,0; 0,0,1";
    static const std::string flip4 = "-1,0,0,0; 0,1,0,0; 0,0,1,0; 0,0,0,1";
    static const std::string p1 = "1,0,0,0; a2-a3,1,0,0; a2,0,1,0; -a2^2/2-a1/2,-a2,a2-a3,1";
    static const std::string p2 =
        "1,0,0,0; -a3/(x+1),1,0,0; -a2/(x-1),0,1,0; (a1-x^2*a1+2*x*a2*a3)/(2*x^2-2),a2/(x-1),-a3/(x+1),1";
    static const std::string p3 = "1,0,0,0; -a3/2,1,0,0; 0,0,1,0; -a1/2,0,-a3/2,1";
    static const std::string p4 = "1,0,0,0; -a3/2,1,0,0; 0,0,a2,0; a2*a3/2-a1/2,0,-a2*a3/2,a2";
    static const std::string p5 = "1,0,0,0; 0,0,-1,0; a2/2,1,0,0; -a1/2,0,a2/2,1";
    static const std::string p6 = "1,0,0,0; 0,0,-a3,0; a2/2,1,0,0; -a1/2-a2*a3/2,0,a2*a3/2,a3";
    static const std::string b1 = "1 1 1 = 2; 2 1 2 = 1; 3 1 3 = 1; ";
    static const std::string b2 = "1 1 1 = -2; 2 1 2 = -1; 3 1 3 = -1; ";
    static const std::string tail = "4 1 1 = a1; 4 1 2 = a2; 4 1 3 = a3";
    static const std::string autM =
        "a11,a12,0,a14; a21,a22,0,a24; (a11*a24-a21*a14)/2,(a12*a24-a22*a14)/2,a11*a22-a12*a21,a34; 0,0,0,1";
    static const std::string det = "(a11*a22-a12*a21)";
    static const std::string be1 = "(a1*a22+a2*a12)/" + det;
    static const std::string be2 = "(a1*a21+a2*a11)/" + det;
    static const std::string be3 = "(a3+4*a1*a24+4*a2*a14)/" + det;
    auto etaM = [](const std::string& sg, const std::string& p, const std::string& q, const std::string& r) {
        return "1 1 4 = " + sg + "; 1 4 4 = -4*(" + p + "); 2 2 4 = " + sg + "; 2 4 4 = 4*(" + q + "); 3 1 4 = " + q +
               "; 3 2 4 = " + p + "; 3 3 4 = " + sg + "; 3 4 4 = " + r + "; 4 4 4 = 2*(" + sg + ")";
    };
    static const std::string s3a = "1 1 1 = 2; 2 1 1 = 1; 2 1 2 = 1; ";   // S02/S03/S12 heads
    static const std::string s5a = "1 1 1 = -2; 2 1 1 = 1; 2 1 2 = -1";   // flipped heads
    static const std::string s8a = "1 1 1 = 2; 2 1 1 = 1; 2 1 2 = 1";
    static const std::vector<ReplayText> steps = {
        // commutative associative and Jordan bases, skew cocycles
        {"A04 general", "A04", true, "2 1 3 = x", "a11,0,0; a21,a11^2,a23; a31,0,a33", "2 1 3 = x*a33/a11"},
        {"A04 normal form", "A04", true, "2 1 3 = x", "x,0,0; 0,x^2,0; 0,0,1", "2 1 3 = 1", true, "R01"},
        {"A05 family", "A05", true, "3 1 2 = x", "", "3 1 2 = x", true, "R02:alpha=x"},
        {"J13 eta1", "J13", true, "2 1 2 = 1/2", "", "2 1 2 = 1/2", true, "R03"},
        {"J13 eta1 scaled", "J13", true, "2 1 2 = 1/2; 3 1 2 = x", "1,0,0; 0,1,0; 0,0,x", "2 1 2 = 1/2; 3 1 2 = 1", true, "R04"},
        {"J13 eta2", "J13", true, "2 1 2 = -1/2", "", "2 1 2 = -1/2", true, "R05"},
        {"J14 eta1", "J14", true, "2 1 2 = 1/2; 3 1 3 = 1/2", "", "2 1 2 = 1/2; 3 1 3 = 1/2", true, "R06"},
        {"J14 eta2", "J14", true, "2 1 2 = -1/2; 3 1 3 = -1/2", "", "2 1 2 = -1/2; 3 1 3 = -1/2", true, "R07"},
        {"J14 eta3", "J14", true, "2 1 2 = -1/2; 3 1 3 = 1/2", "", "2 1 2 = -1/2; 3 1 3 = 1/2", true, "R08"},
        {"J14 swap", "J14", true, "2 1 2 = -1/2; 3 1 3 = 1/2", "1,0,0; 0,0,1; 0,1,0", "2 1 2 = 1/2; 3 1 3 = -1/2"},
        {"J15", "J15", true, "2 1 2 = -1/2; 3 1 2 = x", "1,0,0; -x,1,0; x^2,-2*x,1", "2 1 2 = -1/2", true, "R09"},
        {"J16", "J16", true, "2 1 2 = 1/2; 3 1 2 = x", "1,0,0; -x,1,0; -x^2,2*x,1", "2 1 2 = 1/2", true, "R10"},
        {"J17", "J17", true, "3 1 3 = -1/2; 3 2 3 = 1/2", "0,1,0; 1,0,0; 0,0,1", "3 1 3 = 1/2; 3 2 3 = -1/2", true, "R11"},
        {"J18 eta1", "J18", true, "2 1 2 = -1/2", "", "2 1 2 = -1/2", true, "R12"},
        {"J18 eta1 scaled", "J18", true, "2 1 2 = -1/2; 3 1 2 = x", "1,0,0; 0,1,0; 0,0,x", "2 1 2 = -1/2; 3 1 2 = 1", true, "R13"},
        {"J18 eta2", "J18", true, "2 1 2 = 1/2", "", "2 1 2 = 1/2", true, "R14"},
        {"J19 eta1", "J19", true, "3 1 3 = 1/2", "1,0,0; 0,1,0; a31,0,a33", "3 1 3 = 1/2", true, "R15"},
        {"J19 eta2", "J19", true, "3 1 3 = -1/2", "1,0,0; 0,1,0; a31,0,a33", "3 1 3 = -1/2", true, "R16"},

        // Lie bases, symmetric cocycles
        {"L01 eta2", "L01", false, "2 1 1 = a1; 3 1 1 = a2; 3 1 2 = a3", "1,0,0; 0,a1,0; 0,a2,a1",
         "2 1 1 = 1; 3 1 2 = a3", true, "S01:alpha=a3"},
        {"L01 eta3 printed", "L01", false, "1 2 2 = a1; 3 2 2 = a2; 3 1 2 = a3", "0,a1,0; 1,0,0; 0,a2,a1",
         "2 1 1 = 1; 3 1 2 = a3", false},
        {"L01 eta3 corrected", "L01", false, "1 2 2 = a1; 3 2 2 = a2; 3 1 2 = a3", "0,a1,0; 1,0,0; 0,a2,-a1",
         "2 1 1 = 1; 3 1 2 = -a3", true, "S01:alpha=-a3"},
        {"L01 eta4", "L01", false,
         "1 1 1 = -a2; 1 2 2 = -s^4/a2; 1 1 2 = s^2; 2 1 1 = -a2^2/s^2; 2 2 2 = -s^2; 2 1 2 = a2; "
         "3 1 1 = a4; 3 2 2 = -(s^4*a4 + 2*s^2*a2*a3)/a2^2; 3 1 2 = a3",
         "i*s/a2, s^2/a2, 0; 0,1,0; 0,-s^2*a4/a2^2,i*s/a2", "2 1 1 = 1; 3 1 2 = (s^2*a4 + a2*a3)/a2", true,
         "S01:alpha=(s^2*a4 + a2*a3)/a2"},

        {"L03(-1) eta1 a2=0", "L03:alpha=-1", false, "1 1 1 = 2; 2 1 1 = a1; 2 1 2 = 1; 3 1 3 = 1",
         "1,0,0; 0,a1,0; 0,0,1", s3a + "3 1 3 = 1", true, "S02"},
        {"L03(-1) eta1", "L03:alpha=-1", false, "1 1 1 = 2; 2 1 1 = a1; 2 1 2 = 1; 3 1 1 = a2; 3 1 3 = 1",
         "1,0,0; 0,a1,0; 0,0,a2", s3a + "3 1 1 = 1; 3 1 3 = 1", true, "S03"},
        {"L03(-1) eta1 a1=0", "L03:alpha=-1", false, "1 1 1 = 2; 2 1 2 = 1; 3 1 1 = a2; 3 1 3 = 1",
         "1,0,0; 0,1,0; 0,0,a2", "1 1 1 = 2; 2 1 2 = 1; 3 1 1 = 1; 3 1 3 = 1", true, "S04"},
        {"L03(-1) eta2 a2=0", "L03:alpha=-1", false, "1 1 1 = -2; 2 1 1 = a1; 2 1 2 = -1; 3 1 3 = -1",
         "-1,0,0; 0,0,a1; 0,1,0", "1 1 1 = 2; 2 1 2 = 1; 3 1 1 = 1; 3 1 3 = 1", true, "S04"},
        {"L03(-1) eta2", "L03:alpha=-1", false, "1 1 1 = -2; 2 1 1 = a1; 2 1 2 = -1; 3 1 1 = a2; 3 1 3 = -1",
         "-1,0,0; 0,0,a1; 0,a2,0", s3a + "3 1 1 = 1; 3 1 3 = 1", true, "S03"},
        {"L03(-1) eta2 a1=0", "L03:alpha=-1", false, "1 1 1 = -2; 2 1 2 = -1; 3 1 1 = a2; 3 1 3 = -1",
         "-1,0,0; 0,0,1; 0,a2,0", s3a + "3 1 3 = 1", true, "S02"},

        {"L03(0) eta1 a2=0", "L03:alpha=0", false, "1 1 1 = -2; 2 1 1 = a1; 2 1 2 = -1; 3 1 3 = -2",
         "1,0,0; 0,a1,0; 0,0,1", s5a + "; 3 1 3 = -2", true, "S05", flip3},
        {"L03(0) eta1", "L03:alpha=0", false, "1 1 1 = -2; 2 1 1 = a1; 2 1 2 = -1; 3 1 3 = -2; 3 3 3 = a2",
         "1,0,0; 0,a1,0; 2/a2,0,1/a2", s5a + "; 3 3 3 = 1", true, "S06", flip3},
        {"L03(0) eta2", "L03:alpha=0", false, "1 1 1 = -2; 2 1 1 = a1; 2 1 2 = -1; 3 3 3 = a2",
         "1,0,0; 0,a1,0; 0,0,1/a2", s5a + "; 3 3 3 = 1", true, "S06", flip3},
        {"L03(0) eta2 a2=0", "L03:alpha=0", false, "1 1 1 = -2; 2 1 1 = a1; 2 1 2 = -1",
         "1,0,0; 0,a1,0; 0,0,1", s5a, true, "S07", flip3},
        {"L03(0) eta3", "L03:alpha=0", false,
         "1 1 1 = -2; 2 1 1 = a1; 2 1 2 = -1; 3 1 1 = a2; 3 1 3 = a3; 3 3 3 = a3*(2+a3)/a2",
         "1,0,0; 0,a1,0; -a2/(a3+2),0,a2/(a3*(a3+2))", s5a + "; 3 3 3 = 1", true, "S06", flip3},
        {"L03(0) eta3 a3=0", "L03:alpha=0", false, "1 1 1 = -2; 2 1 1 = a1; 2 1 2 = -1; 3 1 1 = a2",
         "1,0,0; 0,a1,0; -a2/2,0,1", s5a, true, "S07", flip3},
        {"L03(0) eta3 a3=-2", "L03:alpha=0", false, "1 1 1 = -2; 2 1 1 = a1; 2 1 2 = -1; 3 1 1 = a2; 3 1 3 = -2",
         "1,0,0; 0,a1,0; a2/2,0,1", s5a + "; 3 1 3 = -2", true, "S05", flip3},
        {"L03(0) eta4 a2=0", "L03:alpha=0", false, "1 1 1 = 2; 2 1 1 = a1; 2 1 2 = 1; 3 1 3 = 2",
         "1,0,0; 0,a1,0; 0,0,1", s8a + "; 3 1 3 = 2", true, "S08"},
        {"L03(0) eta4", "L03:alpha=0", false, "1 1 1 = 2; 2 1 1 = a1; 2 1 2 = 1; 3 1 3 = 2; 3 3 3 = a2",
         "1,0,0; 0,a1,0; -2/a2,0,1/a2", s8a + "; 3 3 3 = 1", true, "S09"},
        {"L03(0) eta5", "L03:alpha=0", false, "1 1 1 = 2; 2 1 1 = a1; 2 1 2 = 1; 3 3 3 = a2",
         "1,0,0; 0,a1,0; 0,0,1/a2", s8a + "; 3 3 3 = 1", true, "S09"},
        {"L03(0) eta5 a2=0", "L03:alpha=0", false, "1 1 1 = 2; 2 1 1 = a1; 2 1 2 = 1",
         "1,0,0; 0,a1,0; 0,0,1", s8a, true, "S10"},
        {"L03(0) eta6", "L03:alpha=0", false,
         "1 1 1 = 2; 2 1 1 = a1; 2 1 2 = 1; 3 1 1 = a2; 3 1 3 = a3; 3 3 3 = a3*(a3-2)/a2",
         "1,0,0; 0,a1,0; -a2/(a3-2),0,a2/(a3*(a3-2))", s8a + "; 3 3 3 = 1", true, "S09"},
        {"L03(0) eta6 a3=0", "L03:alpha=0", false, "1 1 1 = 2; 2 1 1 = a1; 2 1 2 = 1; 3 1 1 = a2",
         "1,0,0; 0,a1,0; a2/2,0,1", s8a, true, "S10"},
        {"L03(0) eta6 a3=2", "L03:alpha=0", false, "1 1 1 = 2; 2 1 1 = a1; 2 1 2 = 1; 3 1 1 = a2; 3 1 3 = 2",
         "1,0,0; 0,a1,0; -a2/2,0,1", s8a + "; 3 1 3 = 2", true, "S08"},
        {"L03(0) eta7", "L03:alpha=0", false,
         "1 1 1 = 2*a1; 1 1 3 = a2; 2 1 1 = a3; 2 1 2 = a1; 2 2 3 = a2; 3 1 1 = (1-a1^2)/a2; 3 3 3 = a2",
         "1,0,0; 0,a3,0; -a1/a2,0,1/a2", "1 1 3 = 1; 2 1 1 = 1; 2 2 3 = 1; 3 1 1 = 1; 3 3 3 = 1", true, "S11"},

        {"L03(1) eta1", "L03:alpha=1", false, "1 1 1 = 2; 2 1 1 = a1; 2 1 2 = 1; 3 1 1 = a2; 3 1 3 = 1",
         "1,0,0; 0,a1,0; 0,a2,1", s3a + "3 1 3 = 1", true, "S12"},
        {"L03(1) eta1 a1=0", "L03:alpha=1", false, "1 1 1 = 2; 2 1 2 = 1; 3 1 1 = a2; 3 1 3 = 1",
         "1,0,0; 0,0,1; 0,a2,0", s3a + "3 1 3 = 1", true, "S12"},
        {"L03(1) eta2", "L03:alpha=1", false, "1 1 1 = -2; 2 1 1 = a1; 2 1 2 = -1; 3 1 1 = a2; 3 1 3 = -1",
         "1,0,0; 0,a1,0; 0,a2,1", s5a + "; 3 1 3 = -1", true, "S13", flip3},
        {"L03(1) eta2 a1=0", "L03:alpha=1", false, "1 1 1 = -2; 2 1 2 = -1; 3 1 1 = a2; 3 1 3 = -1",
         "1,0,0; 0,0,1; 0,a2,0", s5a + "; 3 1 3 = -1", true, "S13", flip3},

        // binary Lie bases, symmetric cocycles
        {"B1(0) eta1 phi1", "B1:alpha=0", false, b1 + tail + "; 4 1 4 = 2; 4 3 3 = -1", p1,
         b1 + "4 1 4 = 2; 4 3 3 = -1", true, "BB01"},
        {"B1(0) eta1 phi2", "B1:alpha=0", false, b1 + tail + "; 4 1 4 = 2; 4 2 3 = x", p2,
         b1 + "4 1 4 = 2; 4 2 3 = x", true, "BB02:alpha=x"},
        {"B1(0) eta1 phi3", "B1:alpha=0", false, b1 + "4 1 1 = a1; 4 1 3 = a3; 4 1 4 = 2; 4 2 3 = 1", p3,
         b1 + "4 1 4 = 2; 4 2 3 = 1", true, "BB02:alpha=1"},
        {"B1(0) eta1 phi4", "B1:alpha=0", false, b1 + tail + "; 4 1 4 = 2; 4 2 3 = 1", p4,
         b1 + "4 1 2 = 1; 4 1 4 = 2; 4 2 3 = 1", true, "BB03"},
        {"B1(0) eta1 phi5", "B1:alpha=0", false, b1 + "4 1 1 = a1; 4 1 2 = a2; 4 1 4 = 2; 4 2 3 = -1", p5,
         b1 + "4 1 4 = 2; 4 2 3 = 1", true, "BB02:alpha=1"},
        {"B1(0) eta1 phi6", "B1:alpha=0", false, b1 + tail + "; 4 1 4 = 2; 4 2 3 = -1", p6,
         b1 + "4 1 2 = 1; 4 1 4 = 2; 4 2 3 = 1", true, "BB03"},
        {"B1(0) eta2 phi1", "B1:alpha=0", false, b2 + tail + "; 4 3 3 = -1", p1, b2 + "4 3 3 = -1", true, "BB04",
         flip4},
        {"B1(0) eta2 phi2", "B1:alpha=0", false, b2 + tail + "; 4 2 3 = x", p2, b2 + "4 2 3 = x", true,
         "BB05:alpha=x", flip4},
        {"B1(0) eta2 phi3", "B1:alpha=0", false, b2 + "4 1 1 = a1; 4 1 3 = a3; 4 2 3 = 1", p3, b2 + "4 2 3 = 1",
         true, "BB05:alpha=1", flip4},
        {"B1(0) eta2 phi4", "B1:alpha=0", false, b2 + tail + "; 4 2 3 = 1", p4, b2 + "4 1 2 = 1; 4 2 3 = 1", true,
         "BB06", flip4},
        {"B1(0) eta2 phi5", "B1:alpha=0", false, b2 + "4 1 1 = a1; 4 1 2 = a2; 4 2 3 = -1", p5, b2 + "4 2 3 = 1",
         true, "BB05:alpha=1", flip4},
        {"B1(0) eta2 phi6", "B1:alpha=0", false, b2 + tail + "; 4 2 3 = -1", p6, b2 + "4 1 2 = 1; 4 2 3 = 1", true,
         "BB06", flip4},
        {"B1(-1) eta1", "B1:alpha=-1", false, b1 + "4 1 4 = 1", "", b1 + "4 1 4 = 1", true, "BB07"},
        {"B1(-1) eta2", "B1:alpha=-1", false, b2 + "4 1 4 = -1", "", b2 + "4 1 4 = -1", true, "BB08", flip4},

        // the non-Lie Malcev algebra
        {"M eta1 general", "M", false, etaM("1", "a1", "a2", "a3"), autM, etaM("1", be1, be2, be3)},
        {"M eta2 general", "M", false, etaM("-1", "a1", "a2", "a3"), autM, etaM("-1", be1, be2, be3)},
        {"M eta1 (0,0,0)", "M", false, etaM("1", "0", "0", "0"), "", etaM("1", "0", "0", "0"), true, "SS01"},
        {"M eta1 (1,0,0)", "M", false, etaM("1", "1", "0", "0"), "", etaM("1", "1", "0", "0"), true, "SS02"},
        {"M eta1 (0,0,1)", "M", false, etaM("1", "0", "0", "1"), "", etaM("1", "0", "0", "1"), true, "SS03"},
        {"M eta2 (0,0,0)", "M", false, etaM("-1", "0", "0", "0"), "", etaM("-1", "0", "0", "0"), true, "SS04"},
        {"M eta2 (1,0,0)", "M", false, etaM("-1", "1", "0", "0"), "", etaM("-1", "1", "0", "0"), true, "SS05"},
        {"M eta2 (0,0,1)", "M", false, etaM("-1", "0", "0", "1"), "", etaM("-1", "0", "0", "1"), true, "SS06"},
    };
    return steps;
}

// Printed automorphism group shapes: every invertible specialization is an
// automorphism of the base.
struct AutShapeText {
    std::string base;
    std::string matrix;
};

inline const std::vector<AutShapeText>& aut_shape_texts()
{
    static const std::vector<AutShapeText> shapes = {
        {"A04", "a11,0,0; a21,a11^2,a23; a31,0,a33"},
        {"J13", "1,0,0; a21,a22,0; 0,0,a33"},
        {"J14", "1,0,0; a21,a22,a23; a31,a32,a33"},
        {"J15", "1,0,0; a21,a22,0; a21^2,2*a21*a22,a22^2"},
        {"J16", "1,0,0; a21,a22,0; -a21^2,-2*a21*a22,a22^2"},
        {"J17", "1,0,0; 0,1,0; a31,-a31,a33"},
        {"J17", "0,1,0; 1,0,0; a31,-a31,a33"},
        {"J18", "1,0,0; a21,a22,0; 0,0,a33"},
        {"J19", "1,0,0; 0,1,0; a31,0,a33"},
        {"L01", "a11,a12,0; a21,a22,0; a31,a32,a11*a22-a12*a21"},
        {"L03:alpha=-1", "1,0,0; a21,a22,0; a31,0,a33"},
        {"L03:alpha=-1", "-1,0,0; a21,0,a23; a31,a32,0"},
        {"L03:alpha=0", "1,0,0; a21,a22,0; a31,0,a33"},
        {"L03:alpha=1", "1,0,0; a21,a22,a23; a31,a32,a33"},
        {"B1:alpha=0", "1,0,0,0; a21,a22,a23,0; a31,a32,a33,0; a41,a21*a32-a22*a31,a21*a33-a31*a23,a22*a33-a23*a32"},
        {"M", "a11,a12,0,a14; a21,a22,0,a24; (a11*a24-a21*a14)/2,(a12*a24-a22*a14)/2,a11*a22-a12*a21,a34; 0,0,0,1"},
    };
    return shapes;
}

// Orbit dimensions stated in the degeneration proofs.
struct OrbitText {
    std::string id;
    int orbit_dim;
};

inline const std::vector<OrbitText>& orbit_texts()
{
    static const std::vector<OrbitText> orbits = {
        {"A07", 9}, {"A24", 7}, {"A14", 6}, {"A18", 3}, {"A20", 7}, {"A23", 7}, {"A19", 5}, {"A17", 3},
        {"R09", 8}, {"R10", 8}, {"S06", 8}, {"S09", 8}, {"S11", 8}, {"S03", 7}, {"S12", 5}, {"S13", 5},
    };
    return orbits;
}

}  // namespace nassoc::data
