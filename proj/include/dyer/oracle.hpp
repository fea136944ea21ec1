#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "dyer/graph.hpp"
#include "dyer/order.hpp"

namespace dyer {

// One letter of a relator: a generator index and an exponent sign.
struct Letter {
  int gen;
  bool inverse;

  friend bool operator==(const Letter& a, const Letter& b) {
    return a.gen == b.gen && a.inverse == b.inverse;
  }
};

using Word = std::vector<Letter>;

// A finite presentation. Relators are freely reduced and nonempty.
struct Presentation {
  std::vector<std::string> generators;
  std::vector<Word> relators;
};

// The defining presentation of D(g): v^f(v) for finite f, and the braid
// relator pi(u,v,m) pi(v,u,m)^-1 for every edge, where pi(u,v,m) is the
// alternating word uvu... of m letters.
Presentation presentation_of(const DyerGraph& g);

enum class TableStatus { Complete, CapExceeded };

// Result of coset enumeration over the trivial subgroup. When Complete, the
// table is the regular permutation representation: cosets are numbered
// 1..coset_count() in breadth-first discovery order, coset 1 is the identity,
// and apply() is a permutation in each column.
class CosetTable {
 public:
  CosetTable(TableStatus status, int generator_count,
             std::vector<int> col_fwd, std::vector<int> col_bwd,
             std::vector<std::uint32_t> table, std::uint64_t cosets_defined);

  TableStatus status() const { return status_; }
  bool complete() const { return status_ == TableStatus::Complete; }

  // Live cosets when Complete; total cosets defined before the cap otherwise.
  std::uint64_t coset_count() const { return coset_count_; }

  int generator_count() const { return generator_count_; }
  int column_count() const { return columns_; }

  // Image of a coset (1-based) under a generator or its inverse.
  std::uint32_t apply(std::uint32_t coset, int gen, bool inverse = false) const;

 private:
  TableStatus status_;
  int generator_count_;
  int columns_;
  std::vector<int> col_fwd_;
  std::vector<int> col_bwd_;
  std::vector<std::uint32_t> table_;  // row-major, only kept when Complete
  std::uint64_t coset_count_;
};

// HLT-style relator scanning over the trivial subgroup, with immediate
// deduction propagation and union-find coincidence merging. Deterministic
// for fixed input and cap. max_cosets bounds the total number of cosets
// ever allocated (live or merged away).
CosetTable todd_coxeter(const Presentation& p, std::uint64_t max_cosets);

// Coset count of the Complete table on presentation_of(g), or nullopt when
// the cap was exceeded.
std::optional<std::uint64_t> brute_order(const DyerGraph& g,
                                         std::uint64_t max_cosets);

// Brute-force order of the centre from a Complete table, via the regular
// action: an element commutes with every generator iff its coset is fixed
// by right-action/left-action agreement. Throws ValidationError on an
// incomplete table.
std::uint64_t brute_centre_order(const CosetTable& t);

// Order of the abelianisation: infinity when some f = infinity (detected
// structurally), otherwise enumeration of presentation_of(g) augmented with
// all commutator relators; nullopt when the cap was exceeded.
std::optional<GroupOrder> brute_abelianisation_order(const DyerGraph& g,
                                                     std::uint64_t max_cosets);

}  // namespace dyer
