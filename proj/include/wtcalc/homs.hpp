#pragma once

#include <string>
#include <vector>

#include "wtcalc/liealg.hpp"
#include "wtcalc/tower.hpp"

namespace wtcalc {

/* The leaf-sum map out of a tower group: a generator tree goes to the sum
   over its leaf cuts (l, C) of X_l (x) C, landing in the kernel of the
   bracket map; twist generators go to half the value of their interior
   pairing. twisted selects the source (twisted tower into the torsion free
   kernel) versus the plain tower into the quasi kernel. */
struct EtaMap {
    int n = 0;
    int m = 0;
    bool twisted = false;
    IntMatrix matrix;  // tower generators -> kernel presentation coordinates
    HomReport report;
};

EtaMap eta_map(int n, int m, bool twisted);

// tensor coordinates of one tower generator over the bracket-kernel domain;
// index < trees.size() picks a tree, otherwise a twist generator
std::vector<Int> eta_tensor(const TowerGroup& src, std::size_t gen_index,
                            const BracketKernelData& target);

// the leaf-sum map from the plain tower to the quasi bracket kernel is an
// isomorphism; returns its full analysis
HomReport verify_levine(int n, int m);

/* In orders n = 4k-2 the twisted-tower map has kernel (Z/2) (x) L_k,
   generated by the twists of doubled basic commutators. */
struct TwistedKernelReport {
    GroupStructure kernel;
    GroupStructure expected;
    bool matches = false;
    bool generators_die = false;     // each tw((H,H)) maps to zero
    bool generators_inject = false;  // their span has full order 2^w
};

TwistedKernelReport kernel_eta_twisted(int n, int m);

/* Compare the framed and twisted towers around one even order 2k:
   the cokernel of T_{2k} -> T^inf_{2k} and the kernel of
   T~_{2k-1} -> T^inf_{2k-1} agree with the predicted elementary
   2-group. The odd comparison is absent at order zero. */
struct FramedTwistedReport {
    GroupStructure cokernel_even;
    GroupStructure kernel_odd;
    bool has_odd = false;
    GroupStructure expected;
    bool matches = false;
};

FramedTwistedReport framed_vs_twisted(int even_order, int m);

/* Structures of all five groups in one order with the leaf-sum analysis
   and the predicted classifying answers. status is "proved" when both
   predictions are theorems at this order, else "conjectural". */
struct Classification {
    int n = 0;
    int m = 0;
    GroupStructure t, t_reduced, t_twisted, d, d_quasi;
    GroupStructure eta_kernel, eta_cokernel;
    bool eta_iso = false;
    GroupStructure w, w_inf;
    std::string status;
    std::string note;  // decomposition remark in orders 2 mod 4
};

Classification classify(int n, int m);

}  // namespace wtcalc
