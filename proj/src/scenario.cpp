#include "genflag/scenario.hpp"

#include <map>

#include "genflag/linalg.hpp"

namespace genflag {

namespace {

struct Materialized {
    std::vector<long> in_idx, out_idx;
    DenseMatrix m, minv;
};

// Absorbs f on a padded window so every tail entry near the cuts is visible
// in the explicit matrix.
Materialized materialize(const StructuredOperator& f, long pad) {
    const IndexSchema& ord = f.schema.index_schema;
    IndexInterval w = f.window ? *f.window : normalize_interval(ord, -1, 1);
    long d = f.tail_shift < 0 ? -f.tail_shift : f.tail_shift;
    w = w.extend(ord, d + pad);
    StructuredOperator a = absorb(f, w);
    auto inv = invert(a.matrix);
    ensure(inv.has_value(), "operator matrix is singular");
    return {w.indices(ord), output_window(a)->indices(ord), a.matrix, std::move(*inv)};
}

// rank of the sliced block { output above the cut, input below or at it }.
std::size_t crossing_rank(const DenseMatrix& m, const std::vector<long>& row_idx,
                          const std::vector<long>& col_idx, const IndexSchema& ord,
                          long cut_after) {
    std::vector<std::size_t> rs, cs;
    for (std::size_t r = 0; r < row_idx.size(); ++r)
        if (!ord.less_eq(row_idx[r], cut_after)) rs.push_back(r);
    for (std::size_t c = 0; c < col_idx.size(); ++c)
        if (ord.less_eq(col_idx[c], cut_after)) cs.push_back(c);
    DenseMatrix block(rs.size(), cs.size());
    for (std::size_t r = 0; r < rs.size(); ++r)
        for (std::size_t c = 0; c < cs.size(); ++c) block.at(r, c) = m.at(rs[r], cs[c]);
    return rank(block);
}

// Single infinite cut: membership needs equal crossing ranks for the matrix
// and its inverse.
bool golden_ex2_1(const StructuredOperator& f) {
    Materialized mm = materialize(f, 1);
    const IndexSchema& ord = f.schema.index_schema;
    std::size_t rc = crossing_rank(mm.m, mm.out_idx, mm.in_idx, ord, -1);
    std::size_t rcp = crossing_rank(mm.minv, mm.in_idx, mm.out_idx, ord, -1);
    return rc == rcp;
}

// Ascending chain on the positive integers: all invertible matrices with
// finitely many entries below the main diagonal. A finite window with the
// identity outside always qualifies, and this order admits no tail.
bool golden_ex2_2(const StructuredOperator& f) { return f.tail_shift == 0; }

// Two-sided chain on the integers: finitely many entries below the diagonal
// for the matrix and the inverse (which rules out every nonzero tail), plus
// equal crossing ranks at every cut.
bool golden_ex2_3(const StructuredOperator& f) {
    if (f.tail_shift != 0) return false;
    Materialized mm = materialize(f, 1);
    const IndexSchema& ord = f.schema.index_schema;
    for (long a : mm.in_idx) {
        std::size_t rc = crossing_rank(mm.m, mm.out_idx, mm.in_idx, ord, a);
        std::size_t rcp = crossing_rank(mm.minv, mm.in_idx, mm.out_idx, ord, a);
        if (rc != rcp) return false;
    }
    return true;
}

// Shortest symmetric flag with a minimal and a maximal basis vector: all
// invertible matrices with finitary rows and columns. Window plus identity
// tail always qualifies.
bool golden_ex2_4(const StructuredOperator&) { return true; }

// Positive indices below negative indices, a cut everywhere: finitary rows
// and columns plus finitely many entries below the diagonal. As in 2.2 and
// 2.4, every representable operator on this order qualifies.
bool golden_ex2_5(const StructuredOperator&) { return true; }

std::map<std::string, Scenario> build_scenarios() {
    std::map<std::string, Scenario> m;
    Scenario ex2_1{"ex2_1",
                   "single proper subspace of infinite dimension and codimension",
                   finite_cuts_schema(IndexKind::SatoSplit, {-1}),
                   {-2, 2},
                   FormKind::OrthogonalSatoSplit,
                   golden_ex2_1};
    m["ex2_1"] = ex2_1;
    Scenario sato = ex2_1;
    sato.name = "sato";
    sato.summary = "grassmannian of subspaces commensurable with a half-infinite "
                   "coordinate subspace";
    m["sato"] = sato;
    m["ex2_2"] = Scenario{"ex2_2",
                          "ascending chain of finite-dimensional spaces exhausting V",
                          every_position_schema(IndexKind::PositiveInts),
                          {1, 4},
                          std::nullopt,
                          golden_ex2_2};
    m["ex2_3"] = Scenario{"ex2_3",
                          "two-sided chain over the integers",
                          every_position_schema(IndexKind::AllInts),
                          {-2, 2},
                          FormKind::OrthogonalAllInts,
                          golden_ex2_3};
    m["ex2_4"] = Scenario{"ex2_4",
                          "line inside hyperplane, with minimal and maximal basis vectors",
                          finite_cuts_schema(IndexKind::PosThenNeg, {1, -2}),
                          {-2, 2},
                          std::nullopt,
                          golden_ex2_4};
    m["ex2_5"] = Scenario{"ex2_5",
                          "positives below negatives, a cut at every position",
                          every_position_schema(IndexKind::PosThenNeg),
                          {-2, 2},
                          std::nullopt,
                          golden_ex2_5};
    return m;
}

const std::map<std::string, Scenario>& scenarios() {
    static const std::map<std::string, Scenario> table = build_scenarios();
    return table;
}

} // namespace

const Scenario& get_scenario(const std::string& name) {
    auto it = scenarios().find(name);
    require(it != scenarios().end(), "unknown scenario: " + name);
    return it->second;
}

std::vector<std::string> scenario_names() {
    std::vector<std::string> names;
    for (const auto& [k, v] : scenarios()) names.push_back(k);
    return names;
}

} // namespace genflag
