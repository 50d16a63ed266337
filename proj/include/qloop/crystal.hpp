#pragma once

#include <map>
#include <string>
#include <vector>

#include "qloop/coords.hpp"

namespace qloop {

/// E^{(s)}_{i,n} x = E(i,n)^s x / [s]_{v_i}!; s < 0 gives 0.
Element divided_power_E(int node, int degree, int s, const Element& x, const CartanData& cartan);

/// Pi_{i,n,t} = sum_{s>=0} (-1)^s v_i^{-s(s-1)/2} E^{(s)}_{i,n} F'^{s+t}_{i,n},
/// a finite sum because F' is locally nilpotent (each application removes one
/// E_i letter; the alpha_i coordinate of the weight caps the iteration).
/// check_domain verifies x in Z'_{i,n-1} through decompose_Z.
Element pi_projector(int node, int n, int t, const Element& x, const PairingContext& ctx,
                     PairingEngine& engine, bool check_domain = true);

/// x = sum_N E^{(N)}_{i,n} y_N with F'_{i,n}(y_N) = 0.
struct StringDecomposition {
  int node = 0;
  int degree = 0;
  std::map<int, Element> components;  // N -> y_N, literal zeros omitted
};

StringDecomposition string_decompose(int node, int n, const Element& x, const PairingContext& ctx,
                                     PairingEngine& engine, bool check_domain = true);

/// Loop Kashiwara operators: decompose at k = n-1, discard the W' part,
/// shift the string degree by +1 / -1, reassemble.  An H tail passes through
/// untouched; input is split by weight internally.
Element kashiwara_E(int node, int n, const Element& x, const PairingContext& ctx,
                    PairingEngine& engine);
Element kashiwara_F(int node, int n, const Element& x, const PairingContext& ctx,
                    PairingEngine& engine);

struct LatticeBasis {
  std::vector<LatticeRow> rows;  // triangular over A
  int depth = 0;
  size_t words_applied = 0;
  size_t classes_found = 0;  // distinct nonzero classes before triangularization
};

/// Applies all Kashiwara-E words of length <= depth over the alphabet
/// (node, window degree) to the seeds, collects the distinct nonzero classes,
/// and triangularizes their coordinate rows over A.
LatticeBasis generate_lattice(int depth, const std::vector<std::pair<Element, std::string>>& seeds,
                              Coordinatizer& coord);

struct ResidueEntry {
  std::map<Word, mpq_class> residue;  // coordinates mod v, zeros dropped
  bool in_A = true;
  bool zero = false;
  std::string provenance;
};

struct ResidueReport {
  std::vector<ResidueEntry> entries;
  size_t nonzero = 0;
  size_t zeros = 0;
  size_t duplicates = 0;
};

ResidueReport mod_v_basis(const LatticeBasis& lat);

/// Deterministic exploratory report: non-conjectural checks (A-integrality,
/// F~ E~ = id on nonzero images) and the conjectural items (lattice
/// stability, residue closure, E~/F~ pairing on classes), each graded
/// PASS / FAIL / WINDOW-LIMITED.  Format: `ITEM <k> <grade> <detail>` lines.
std::string crystal_report(int depth, const PairingContext& ctx);

}  // namespace qloop
