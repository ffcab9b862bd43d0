#pragma once

#include "heckerep/exactnum/laurent.hpp"
#include "heckerep/recoupling/params.hpp"

// Recoupling quantities in Q(A). Public functions return reduced LaurentFractions;
// the factored:: variants return the cyclotomic-factored form used internally.
namespace heckerep {

LaurentFraction qint(long n);
LaurentFraction qfact(long n);
LaurentFraction delta(int i);
LaurentFraction twist(int i, TwistConvention convention = TwistConvention::IPlus2);
// Throws NotAdmissible unless (a,b,c) has even sum and satisfies the triangle inequalities.
LaurentFraction theta_net(int a, int b, int c);
// Vertex triples (A,B,E), (B,C,F), (C,D,E), (A,D,F).
LaurentFraction tet(int a, int b, int e, int c, int d, int f);
// Kauffman-Lins symbol {a b i; c d j}: coefficient of the i-channel (a,d,i),(b,c,i)
// when re-expanding the j-channel (a,b,j),(c,d,j).
LaurentFraction sixj(int a, int b, int i, int c, int d, int j);
// a^{i,j}_l and its bar at the level of params (sum over level-admissible k).
LaurentFraction coupling_a(const TheoryParams& params, int i, int j, int l);
LaurentFraction coupling_a_bar(const TheoryParams& params, int i, int j, int l);

namespace factored {

CycloFraction qint(long n);
CycloFraction qfact(long n);
CycloFraction delta(int i);
CycloFraction twist(int i, TwistConvention convention);
CycloFraction theta_net(int a, int b, int c);
// Kauffman-Lins Tet[a b e; c d f]: faces (a,d,e), (b,c,e), (a,b,f), (c,d,f).
CycloFraction tet_kl(int a, int b, int e, int c, int d, int f);
CycloFraction sixj(int a, int b, int i, int c, int d, int j);
CycloFraction coupling_a(int level, TwistConvention convention, int i, int j, int l, bool bar);

}  // namespace factored

}  // namespace heckerep
