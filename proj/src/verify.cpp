#include "genflag/verify.hpp"

#include <algorithm>
#include <functional>

#include "genflag/action.hpp"
#include "genflag/linalg.hpp"

namespace genflag {

std::uint64_t splitmix64(std::uint64_t x) {
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

std::mt19937_64 trial_rng(std::uint64_t master_seed, std::uint64_t stream, long trial) {
    std::uint64_t s = splitmix64(master_seed ^ splitmix64(stream));
    return std::mt19937_64(splitmix64(s + static_cast<std::uint64_t>(trial) + 1));
}

namespace {

long uniform(std::mt19937_64& rng, long lo, long hi) {
    return std::uniform_int_distribution<long>(lo, hi)(rng);
}

std::uint64_t fnv1a(const std::string& s) {
    std::uint64_t h = 0xcbf29ce484222325ULL;
    for (unsigned char c : s) {
        h ^= c;
        h *= 0x100000001b3ULL;
    }
    return h;
}

Rational small_entry(std::mt19937_64& rng) {
    switch (uniform(rng, 0, 9)) {
        case 0: case 1: case 2: return 0;
        case 3: case 4: return 1;
        case 5: case 6: return -1;
        case 7: return 2;
        case 8: return -2;
        default: return rat(uniform(rng, -3, 3), uniform(rng, 1, 2));
    }
}

} // namespace

IndexInterval random_window(const IndexSchema& ord, std::mt19937_64& rng, long max_size) {
    long size = uniform(rng, 2, std::max(2L, max_size));
    switch (ord.kind) {
        case IndexKind::PositiveInts: {
            long lo = uniform(rng, 1, 3);
            return {lo, lo + size - 1};
        }
        case IndexKind::AllInts: {
            long lo = uniform(rng, -size - 1, 2);
            return {lo, lo + size - 1};
        }
        case IndexKind::SatoSplit:
        case IndexKind::PosThenNeg: {
            long mode = uniform(rng, 0, 3);
            if (mode == 0) {
                long j = uniform(rng, 0, 1);
                return {1 + j, j + size};
            }
            if (mode == 1) {
                long j = uniform(rng, 0, 1);
                return {-j - size, -1 - j};
            }
            long neg = uniform(rng, 1, size - 1);
            return {-neg, size - neg};
        }
    }
    throw invariant_error("unknown index kind");
}

DenseMatrix random_invertible(std::size_t n, std::mt19937_64& rng) {
    for (;;) {
        DenseMatrix m(n, n);
        for (std::size_t r = 0; r < n; ++r)
            for (std::size_t c = 0; c < n; ++c) m.at(r, c) = small_entry(rng);
        if (rank(m) == n) return m;
    }
}

StructuredOperator random_operator(const FlagSchema& s, std::mt19937_64& rng,
                                   OperatorOptions opt) {
    IndexInterval w = random_window(s.index_schema, rng, opt.max_window);
    long tail = 0;
    if (opt.allow_tail && s.index_schema.has_translation() && uniform(rng, 0, 1))
        tail = uniform(rng, -opt.max_tail, opt.max_tail);
    return make_operator(s, w, tail, random_invertible(w.size(s.index_schema), rng));
}

StructuredOperator random_eligible_operator(const FlagSchema& s, std::mt19937_64& rng,
                                            long max_window) {
    return random_operator(s, rng, OperatorOptions{max_window, 0, false});
}

StructuredOperator random_upper_block_operator(const FlagSchema& s, std::mt19937_64& rng,
                                               long max_window) {
    IndexInterval w = random_window(s.index_schema, rng, max_window);
    std::size_t n = w.size(s.index_schema);
    std::vector<long> prefixes;
    for (const auto& t : window_traces(s, w)) prefixes.push_back(t.prefix);
    auto block_of = [&](std::size_t pos) {
        std::size_t b = 0;
        for (long l : prefixes)
            if (l <= static_cast<long>(pos)) ++b;
        return b;
    };
    for (;;) {
        DenseMatrix m(n, n);
        for (std::size_t r = 0; r < n; ++r)
            for (std::size_t c = 0; c < n; ++c)
                m.at(r, c) = block_of(r) <= block_of(c) ? small_entry(rng) : Rational(0);
        if (rank(m) == n) return make_operator(s, w, 0, m);
    }
}

FlagPoint random_point(const FlagSchema& s, std::mt19937_64& rng, long max_window,
                       long max_offset) {
    IndexInterval w = random_window(s.index_schema, rng, max_window);
    std::size_t n = w.size(s.index_schema);
    DenseMatrix t = random_invertible(n, rng);
    auto traces = window_traces(s, w);
    long k = 0;
    bool single_cut_sato = s.family == CutFamily::FiniteCuts && s.cuts.size() == 1 &&
                           s.index_schema.kind == IndexKind::SatoSplit;
    if (max_offset > 0 && single_cut_sato && traces.size() == 1) {
        k = uniform(rng, -max_offset, max_offset);
        k = std::max(k, -traces[0].prefix);
        k = std::min(k, static_cast<long>(n) - traces[0].prefix);
    }
    FlagPoint p{s, w, {}};
    for (const auto& tr : traces) {
        std::size_t d = static_cast<std::size_t>(tr.prefix + k);
        p.chain.emplace_back(tr.prefix, Subspace::span(n, t.block(0, d, 0, n)));
    }
    return p;
}

StructuredOperator random_form_preserving(const FormSchema& form, const FlagSchema& s,
                                          std::mt19937_64& rng, long max_half_window) {
    require(s.index_schema.kind == form.index_kind(), "form kind does not match the schema");
    const IndexSchema& ord = s.index_schema;
    long h = uniform(rng, 1, std::max(1L, max_half_window));
    IndexInterval w = pairing_closure(ord, normalize_interval(ord, -h, h));
    auto idx = w.indices(ord);
    std::size_t n = idx.size();
    auto pos = [&](long i) { return window_position(idx, i); };
    bool symp = form.symplectic();

    DenseMatrix m = DenseMatrix::identity(n);
    long reps = uniform(rng, 2, 5);
    for (long rep = 0; rep < reps; ++rep) {
        DenseMatrix g = DenseMatrix::identity(n);
        Rational lam = rat(uniform(rng, -2, 2), uniform(rng, 1, 2));
        long i = uniform(rng, 1, h);
        long j = uniform(rng, 1, h);
        switch (uniform(rng, 0, 4)) {
            case 0: // pair swap (with the symplectic sign)
                g.at(pos(i), pos(i)) = 0;
                g.at(pos(-i), pos(-i)) = 0;
                g.at(pos(i), pos(-i)) = 1;
                g.at(pos(-i), pos(i)) = symp ? Rational(-1) : Rational(1);
                break;
            case 1: { // scale a dual pair
                Rational t = rat(uniform(rng, 0, 1) ? 2 : 3, 1);
                if (uniform(rng, 0, 1)) t = -t;
                g.at(pos(i), pos(i)) = t;
                g.at(pos(-i), pos(-i)) = 1 / t;
                break;
            }
            case 2: // e_j += lam e_i, e_{-i} -= lam e_{-j}
                if (i == j) break;
                g.at(pos(i), pos(j)) = lam;
                g.at(pos(-j), pos(-i)) = -lam;
                break;
            case 3: // e_{-j} += lam e_i, e_{-i} += (-eps lam) e_j
                if (i == j) {
                    if (symp) g.at(pos(i), pos(-i)) = lam;
                    break;
                }
                g.at(pos(i), pos(-j)) = lam;
                g.at(pos(j), pos(-i)) = symp ? lam : -lam;
                break;
            case 4: // e_{-j} += lam e_{-i}, e_i -= lam e_j
                if (i == j) {
                    if (symp) g.at(pos(-i), pos(i)) = lam;
                    break;
                }
                g.at(pos(-i), pos(-j)) = lam;
                g.at(pos(j), pos(i)) = -lam;
                break;
        }
        m = g * m;
    }
    return make_operator(s, w, 0, m);
}

// ---------------------------------------------------------------------------
// Property plumbing
// ---------------------------------------------------------------------------

namespace {

using TrialFn = std::function<Json(std::mt19937_64&)>; // null = pass

PropertyResult run_property(const std::string& name, std::uint64_t seed, long trials,
                            const TrialFn& fn) {
    PropertyResult res{name, true, trials, Json()};
    std::uint64_t stream = fnv1a(name);
    for (long t = 0; t < trials; ++t) {
        auto rng = trial_rng(seed, stream, t);
        Json cx;
        try {
            cx = fn(rng);
        } catch (const std::exception& e) {
            cx = Json{{"exception", e.what()}};
        }
        if (!cx.is_null()) {
            cx["trial"] = t;
            res.pass = false;
            res.counterexample = std::move(cx);
            res.trials = t + 1;
            break;
        }
    }
    return res;
}

DenseMatrix random_matrix(std::mt19937_64& rng, long max_dim) {
    long r = uniform(rng, 1, max_dim);
    long c = uniform(rng, 1, max_dim);
    DenseMatrix m(r, c);
    for (long i = 0; i < r; ++i)
        for (long j = 0; j < c; ++j) m.at(i, j) = small_entry(rng);
    return m;
}

Subspace random_subspace(std::mt19937_64& rng, std::size_t ambient, long max_rows) {
    DenseMatrix g(uniform(rng, 0, max_rows), ambient);
    for (std::size_t r = 0; r < g.rows(); ++r)
        for (std::size_t c = 0; c < ambient; ++c) g.at(r, c) = small_entry(rng);
    return Subspace::span(ambient, g);
}

FlagSchema random_schema(std::mt19937_64& rng) {
    static const IndexKind kinds[4] = {IndexKind::PositiveInts, IndexKind::AllInts,
                                       IndexKind::SatoSplit, IndexKind::PosThenNeg};
    IndexKind kind = kinds[uniform(rng, 0, 3)];
    if (uniform(rng, 0, 1)) return every_position_schema(kind);
    IndexSchema ord{kind, false};
    for (int attempt = 0; attempt < 20; ++attempt) {
        std::vector<long> cuts;
        long k = uniform(rng, 1, 3);
        for (long c = 0; c < k; ++c) {
            long pos = uniform(rng, -5, 5);
            if (!ord.valid(pos)) continue;
            if (ord.max_index() && pos == *ord.max_index()) continue;
            cuts.push_back(pos);
        }
        if (ord.self_reverse() && uniform(rng, 0, 1)) {
            long t = kind == IndexKind::PosThenNeg ? 0 : uniform(rng, -2, 2);
            std::vector<long> mirrored;
            bool ok = true;
            for (long c : cuts) {
                auto sc = ord.succ(c);
                auto img = sc ? ord.succ_n(-*sc, t) : std::nullopt;
                if (!img || !ord.valid(*img) || (ord.max_index() && *img == *ord.max_index())) {
                    ok = false;
                    break;
                }
                mirrored.push_back(*img);
            }
            if (ok) cuts.insert(cuts.end(), mirrored.begin(), mirrored.end());
        }
        std::sort(cuts.begin(), cuts.end(), [&](long a, long b) { return ord.less(a, b); });
        cuts.erase(std::unique(cuts.begin(), cuts.end()), cuts.end());
        FlagSchema s{ord, CutFamily::FiniteCuts, cuts};
        if (!validate_schema(s)) return s;
    }
    return every_position_schema(kind);
}

Rational sparse_pairing(const SparseVec& y, const SparseVec& x) {
    Rational s = 0;
    for (const auto& [i, v] : y) {
        auto it = x.find(i);
        if (it != x.end()) s += v * it->second;
    }
    return s;
}

SparseVec random_sparse(const IndexSchema& ord, std::mt19937_64& rng) {
    SparseVec v;
    long k = uniform(rng, 1, 4);
    for (long e = 0; e < k; ++e) {
        long i = uniform(rng, -5, 5);
        if (!ord.valid(i)) continue;
        v[i] = small_entry(rng);
    }
    for (auto it = v.begin(); it != v.end();)
        it = it->second == 0 ? v.erase(it) : std::next(it);
    return v;
}

const FlagSchema& scenario_schema(const char* name) { return get_scenario(name).schema; }

Json op_doc(const StructuredOperator& f) { return operator_to_json(f); }

// ---------------------------------------------------------------------------
// Suites
// ---------------------------------------------------------------------------

SuiteReport suite_linear_core(std::uint64_t seed, long trials) {
    SuiteReport rep{"linear-core", seed, trials, {}};
    rep.results.push_back(run_property("rref-idempotent", seed, trials, [](std::mt19937_64& rng) {
        DenseMatrix m = random_matrix(rng, 6);
        if (rref(rref(m)) == rref(m)) return Json();
        return Json{{"matrix", matrix_to_json(m)}};
    }));
    rep.results.push_back(run_property("rank-transpose", seed, trials, [](std::mt19937_64& rng) {
        DenseMatrix m = random_matrix(rng, 6);
        if (rank(m) == rank(m.transpose())) return Json();
        return Json{{"matrix", matrix_to_json(m)}};
    }));
    rep.results.push_back(
        run_property("annihilator-involution", seed, trials, [](std::mt19937_64& rng) {
            std::size_t n = static_cast<std::size_t>(uniform(rng, 1, 6));
            Subspace s = random_subspace(rng, n, 6);
            Subspace a = s.annihilator();
            if (a.dim() != n - s.dim()) return Json{{"reason", "dimension"}};
            if (a.annihilator() != s) return Json{{"reason", "involution"}};
            Subspace t = s.sum(random_subspace(rng, n, 2));
            if (!a.contains(t.annihilator())) return Json{{"reason", "order-reversal"}};
            return Json();
        }));
    rep.results.push_back(
        run_property("invert-roundtrip", seed, trials, [](std::mt19937_64& rng) {
            std::size_t n = static_cast<std::size_t>(uniform(rng, 1, 6));
            DenseMatrix m = random_invertible(n, rng);
            auto inv = invert(m);
            if (!inv) return Json{{"reason", "reported singular"}};
            if (m * *inv != DenseMatrix::identity(n)) return Json{{"reason", "m*inv != id"}};
            auto back = invert(*inv);
            if (!back || *back != m) return Json{{"reason", "double inverse"}};
            return Json();
        }));
    rep.results.push_back(
        run_property("intersect-dimension-law", seed, trials, [](std::mt19937_64& rng) {
            std::size_t n = static_cast<std::size_t>(uniform(rng, 1, 6));
            Subspace a = random_subspace(rng, n, 4);
            Subspace b = random_subspace(rng, n, 4);
            Subspace meet = a.intersect(b);
            Subspace join = a.sum(b);
            if (a.dim() + b.dim() != meet.dim() + join.dim())
                return Json{{"reason", "dimension law"}};
            if (a.intersect(a) != a) return Json{{"reason", "idempotence"}};
            if (!a.contains(meet) || !b.contains(meet)) return Json{{"reason", "containment"}};
            return Json();
        }));
    return rep;
}

SuiteReport suite_schema_symmetry(std::uint64_t seed, long trials) {
    SuiteReport rep{"schema-symmetry", seed, trials, {}};
    rep.results.push_back(run_property("worked-example-symmetry", seed, 1, [](std::mt19937_64&) {
        const std::pair<const char*, bool> expected[] = {{"ex2_1", true},
                                                         {"ex2_2", false},
                                                         {"ex2_3", true},
                                                         {"ex2_4", true},
                                                         {"ex2_5", true}};
        for (const auto& [name, want] : expected)
            if (is_symmetric(scenario_schema(name)) != want)
                return Json{{"scenario", name}, {"expected", want}};
        return Json();
    }));
    rep.results.push_back(run_property("dual-involution", seed, trials, [](std::mt19937_64& rng) {
        FlagSchema s = random_schema(rng);
        if (dual_schema(dual_schema(s)) != s) return schema_to_json(s);
        return Json();
    }));
    rep.results.push_back(
        run_property("symmetric-dual-symmetric", seed, trials, [](std::mt19937_64& rng) {
            FlagSchema s = random_schema(rng);
            if (is_symmetric(s) && !is_symmetric(dual_schema(s))) return schema_to_json(s);
            return Json();
        }));
    rep.results.push_back(
        run_property("mirror-matches-symmetry", seed, trials, [](std::mt19937_64& rng) {
            FlagSchema s = random_schema(rng);
            if (is_symmetric(s) != find_mirror(s).has_value()) return schema_to_json(s);
            return Json();
        }));
    rep.results.push_back(
        run_property("truncate-type-extension", seed, trials, [](std::mt19937_64& rng) {
            FlagSchema s = random_schema(rng);
            IndexInterval w = random_window(s.index_schema, rng, 5);
            IndexInterval big = w.extend(s.index_schema, uniform(rng, 1, 2));
            auto idx = w.indices(s.index_schema);
            auto big_idx = big.indices(s.index_schema);
            for (const auto& t : window_traces(s, w)) {
                long grown = lower_size_in_window(s, t.cut, big_idx);
                if (grown - t.prefix < 0 ||
                    grown - t.prefix > static_cast<long>(big_idx.size() - idx.size()))
                    return schema_to_json(s);
                TypeVector big_type = truncate_type(s, big);
                if (std::find(big_type.dims.begin(), big_type.dims.end(), grown) ==
                    big_type.dims.end())
                    return schema_to_json(s);
            }
            return Json();
        }));
    return rep;
}

SuiteReport suite_commensurability(std::uint64_t seed, long trials) {
    SuiteReport rep{"commensurability", seed, trials, {}};
    static const char* names[4] = {"ex2_1", "ex2_3", "ex2_4", "ex2_5"};
    rep.results.push_back(
        run_property("equivalence-relation", seed, trials, [](std::mt19937_64& rng) {
            const FlagSchema& s = scenario_schema(names[uniform(rng, 0, 3)]);
            FlagPoint p = random_point(s, rng, 5, 1);
            FlagPoint q = random_point(s, rng, 5, 1);
            FlagPoint r = random_point(s, rng, 5, 1);
            if (!is_commensurable(p, p)) return Json{{"reason", "reflexive"}};
            if (is_commensurable(p, q) != is_commensurable(q, p))
                return Json{{"reason", "symmetric"}};
            if (is_commensurable(p, q) && is_commensurable(q, r) && !is_commensurable(p, r))
                return Json{{"reason", "transitive"}};
            return Json();
        }));
    rep.results.push_back(
        run_property("enlarge-preserves-structure", seed, trials, [](std::mt19937_64& rng) {
            const FlagSchema& s = scenario_schema(names[uniform(rng, 0, 3)]);
            FlagPoint p = random_point(s, rng, 5, 1);
            IndexInterval big = p.window.extend(s.index_schema, uniform(rng, 1, 3));
            FlagPoint q = enlarge_window(p, big);
            validate_point(q);
            if (!point_equal(p, q)) return Json{{"reason", "not equal"}};
            if (!is_commensurable(p, q)) return Json{{"reason", "not commensurable"}};
            if (enlarge_window(q, big.extend(s.index_schema, 1)).chain !=
                enlarge_window(p, big.extend(s.index_schema, 1)).chain)
                return Json{{"reason", "composition"}};
            return Json();
        }));
    rep.results.push_back(
        run_property("type-vector-consistency", seed, trials, [](std::mt19937_64& rng) {
            const FlagSchema& s = scenario_schema(names[uniform(rng, 0, 3)]);
            FlagPoint p = random_point(s, rng, 5, 1);
            TypeVector t = truncate_type(s, p.window);
            auto pos = relative_position(p);
            if (t.dims.size() != p.chain.size()) return Json{{"reason", "length"}};
            for (std::size_t i = 0; i < t.dims.size(); ++i)
                if (t.dims[i] + pos[i].second != static_cast<long>(p.chain[i].second.dim()))
                    return Json{{"reason", "dims"}};
            return Json();
        }));
    return rep;
}

SuiteReport suite_degree_additivity(std::uint64_t seed, long trials) {
    SuiteReport rep{"degree-additivity", seed, trials, {}};
    rep.results.push_back(run_property("additivity", seed, trials, [](std::mt19937_64& rng) {
        const FlagSchema& s = scenario_schema(uniform(rng, 0, 1) ? "ex2_3" : "sato");
        OperatorOptions opt{12, 2, true};
        StructuredOperator f = random_operator(s, rng, opt);
        StructuredOperator g = random_operator(s, rng, opt);
        StructuredOperator fg = compose(f, g);
        IndexInterval w = fg.window ? *fg.window : IndexInterval{-1, 1};
        if (f.window) w = w.unite(*f.window);
        if (g.window) w = w.unite(*g.window);
        for (CutId cut : report_cuts(s, w)) {
            if (degree_at_cut(fg, cut) != degree_at_cut(f, cut) + degree_at_cut(g, cut))
                return Json{{"cut", cut.after}, {"f", op_doc(f)}, {"g", op_doc(g)}};
        }
        if (fg.tail_shift != f.tail_shift + g.tail_shift)
            return Json{{"reason", "tail"}, {"f", op_doc(f)}, {"g", op_doc(g)}};
        return Json();
    }));
    rep.results.push_back(run_property("inverse-degree", seed, trials, [](std::mt19937_64& rng) {
        const FlagSchema& s = scenario_schema(uniform(rng, 0, 1) ? "ex2_3" : "sato");
        StructuredOperator f = random_operator(s, rng, OperatorOptions{8, 2, true});
        IndexInterval w = f.window ? *f.window : IndexInterval{-1, 1};
        for (CutId cut : report_cuts(s, w))
            if (degree_at_cut(invert_op(f), cut) != -degree_at_cut(f, cut))
                return Json{{"cut", cut.after}, {"f", op_doc(f)}};
        return Json();
    }));
    return rep;
}

SuiteReport suite_operator_representation(std::uint64_t seed, long trials) {
    SuiteReport rep{"operator-representation", seed, trials, {}};
    static const char* names[4] = {"sato", "ex2_3", "ex2_4", "ex2_5"};
    rep.results.push_back(run_property("group-identities", seed, trials, [](std::mt19937_64& rng) {
        const FlagSchema& s = scenario_schema(names[uniform(rng, 0, 3)]);
        StructuredOperator f = random_operator(s, rng, OperatorOptions{6, 2, true});
        if (!op_equal(compose(f, invert_op(f)), identity_op(s)))
            return Json{{"reason", "right inverse"}, {"f", op_doc(f)}};
        if (!op_equal(compose(invert_op(f), f), identity_op(s)))
            return Json{{"reason", "left inverse"}, {"f", op_doc(f)}};
        if (!op_equal(invert_op(invert_op(f)), f))
            return Json{{"reason", "double inverse"}, {"f", op_doc(f)}};
        if (!op_equal(compose(identity_op(s), f), f) || !op_equal(compose(f, identity_op(s)), f))
            return Json{{"reason", "identity"}, {"f", op_doc(f)}};
        return Json();
    }));
    rep.results.push_back(
        run_property("absorb-is-transparent", seed, trials, [](std::mt19937_64& rng) {
            const FlagSchema& s = scenario_schema(names[uniform(rng, 0, 3)]);
            StructuredOperator f = random_operator(s, rng, OperatorOptions{5, 2, true});
            IndexInterval w = f.window->extend(s.index_schema, uniform(rng, 1, 3));
            StructuredOperator a = absorb(f, w);
            if (!op_equal(a, f)) return Json{{"reason", "op_equal"}, {"f", op_doc(f)}};
            for (int i = 0; i < 3; ++i) {
                SparseVec x = random_sparse(s.index_schema, rng);
                if (apply_to_vector(a, x) != apply_to_vector(f, x))
                    return Json{{"reason", "apply"}, {"f", op_doc(f)}};
            }
            IndexInterval w2 = w.extend(s.index_schema, 1);
            if (absorb(absorb(f, w), w2).matrix != absorb(f, w2).matrix)
                return Json{{"reason", "composition"}, {"f", op_doc(f)}};
            return Json();
        }));
    rep.results.push_back(
        run_property("absorbed-tail-columns-unit", seed, trials, [](std::mt19937_64& rng) {
            // The structural shadow of the pairing conditions: rows and
            // columns outside the original window carry exactly one unit.
            const FlagSchema& s = scenario_schema(names[uniform(rng, 0, 3)]);
            StructuredOperator f = random_operator(s, rng, OperatorOptions{5, 2, true});
            IndexInterval w = f.window->extend(s.index_schema, 2);
            StructuredOperator a = absorb(f, w);
            auto in_idx = w.indices(s.index_schema);
            auto out_idx = output_window(a)->indices(s.index_schema);
            auto old_in = f.window->indices(s.index_schema);
            auto old_out = output_window(f)->indices(s.index_schema);
            for (std::size_t c = 0; c < in_idx.size(); ++c) {
                if (std::find(old_in.begin(), old_in.end(), in_idx[c]) != old_in.end()) continue;
                std::size_t nz = 0;
                bool unit = true;
                for (std::size_t r = 0; r < out_idx.size(); ++r)
                    if (a.matrix.at(r, c) != 0) {
                        ++nz;
                        unit = unit && a.matrix.at(r, c) == 1;
                    }
                if (nz != 1 || !unit) return Json{{"reason", "column"}, {"f", op_doc(f)}};
            }
            for (std::size_t r = 0; r < out_idx.size(); ++r) {
                if (std::find(old_out.begin(), old_out.end(), out_idx[r]) != old_out.end())
                    continue;
                std::size_t nz = 0;
                for (std::size_t c = 0; c < in_idx.size(); ++c)
                    if (a.matrix.at(r, c) != 0) ++nz;
                if (nz != 1) return Json{{"reason", "row"}, {"f", op_doc(f)}};
            }
            return Json();
        }));
    return rep;
}

SuiteReport suite_eligibility_closure(std::uint64_t seed, long trials) {
    SuiteReport rep{"eligibility-closure", seed, trials, {}};
    static const char* names[3] = {"sato", "ex2_3", "ex2_4"};
    rep.results.push_back(run_property("group-closure", seed, trials, [](std::mt19937_64& rng) {
        const FlagSchema& s = scenario_schema(names[uniform(rng, 0, 2)]);
        StructuredOperator f = random_eligible_operator(s, rng);
        StructuredOperator g = random_eligible_operator(s, rng);
        if (!is_eligible(f) || !is_eligible(g)) return Json{{"reason", "generator not eligible"}};
        if (!is_eligible(compose(f, g)))
            return Json{{"reason", "product"}, {"f", op_doc(f)}, {"g", op_doc(g)}};
        if (!is_eligible(invert_op(f))) return Json{{"reason", "inverse"}, {"f", op_doc(f)}};
        return Json();
    }));
    rep.results.push_back(run_property("normality", seed, trials, [](std::mt19937_64& rng) {
        const FlagSchema& s = scenario_schema(names[uniform(rng, 0, 2)]);
        StructuredOperator f = random_eligible_operator(s, rng);
        StructuredOperator g = random_operator(s, rng, OperatorOptions{6, 2, true});
        StructuredOperator conj = compose(compose(g, f), invert_op(g));
        if (!is_eligible(conj)) return Json{{"f", op_doc(f)}, {"g", op_doc(g)}};
        return Json();
    }));
    return rep;
}

SuiteReport suite_action_well_defined(std::uint64_t seed, long trials) {
    SuiteReport rep{"action-well-defined", seed, trials, {}};
    static const char* names[4] = {"ex2_1", "ex2_3", "ex2_4", "ex2_5"};
    rep.results.push_back(run_property("commensurable-image", seed, trials,
                                       [](std::mt19937_64& rng) {
                                           const FlagSchema& s =
                                               scenario_schema(names[uniform(rng, 0, 3)]);
                                           StructuredOperator f = random_eligible_operator(s, rng, 5);
                                           FlagPoint p = random_point(s, rng, 5);
                                           FlagPoint q = act(f, p);
                                           validate_point(q);
                                           if (!is_commensurable(q, p))
                                               return Json{{"f", op_doc(f)}, {"p", point_to_json(p)}};
                                           return Json();
                                       }));
    rep.results.push_back(run_property("action-law", seed, trials, [](std::mt19937_64& rng) {
        const FlagSchema& s = scenario_schema(names[uniform(rng, 0, 3)]);
        StructuredOperator f = random_eligible_operator(s, rng, 5);
        StructuredOperator g = random_eligible_operator(s, rng, 5);
        FlagPoint p = random_point(s, rng, 5);
        if (!point_equal(act(compose(f, g), p), act(f, act(g, p))))
            return Json{{"f", op_doc(f)}, {"g", op_doc(g)}, {"p", point_to_json(p)}};
        return Json();
    }));
    rep.results.push_back(run_property("action-law-with-tails", seed, trials,
                                       [](std::mt19937_64& rng) {
                                           const FlagSchema& s = scenario_schema("sato");
                                           OperatorOptions opt{5, 2, true};
                                           StructuredOperator f = random_operator(s, rng, opt);
                                           StructuredOperator g = random_operator(s, rng, opt);
                                           FlagPoint p = random_point(s, rng, 5, 1);
                                           if (!point_equal(act(compose(f, g), p), act(f, act(g, p))))
                                               return Json{{"f", op_doc(f)}, {"g", op_doc(g)}};
                                           return Json();
                                       }));
    rep.results.push_back(
        run_property("action-law-with-tails-two-cuts", seed, trials, [](std::mt19937_64& rng) {
            // Finitely many cuts keep the window model exact even for
            // shifted operators; every cut's offset moves by the tail.
            static const FlagSchema s = finite_cuts_schema(IndexKind::SatoSplit, {-2, 1});
            OperatorOptions opt{5, 2, true};
            StructuredOperator f = random_operator(s, rng, opt);
            StructuredOperator g = random_operator(s, rng, opt);
            FlagPoint p = random_point(s, rng, 5);
            if (!point_equal(act(compose(f, g), p), act(f, act(g, p))))
                return Json{{"reason", "law"}, {"f", op_doc(f)}, {"g", op_doc(g)}};
            auto before = relative_position(enlarge_window(p, p.window.extend(s.index_schema, 4)));
            auto after = relative_position(act(f, p));
            if (before.size() != after.size()) return Json{{"reason", "trace count"}};
            for (std::size_t i = 0; i < after.size(); ++i)
                if (after[i].second != before[i].second + f.tail_shift)
                    return Json{{"reason", "offset"}, {"f", op_doc(f)}, {"p", point_to_json(p)}};
            return Json();
        }));
    return rep;
}

SuiteReport suite_oracle_equivalence(std::uint64_t seed, long trials) {
    SuiteReport rep{"oracle-equivalence", seed, trials, {}};
    static const char* names[4] = {"ex2_1", "ex2_3", "ex2_4", "ex2_5"};
    rep.results.push_back(run_property("act-equals-direct", seed, trials,
                                       [](std::mt19937_64& rng) {
                                           const FlagSchema& s =
                                               scenario_schema(names[uniform(rng, 0, 3)]);
                                           StructuredOperator f = random_eligible_operator(s, rng, 5);
                                           FlagPoint p = random_point(s, rng, 5, 1);
                                           if (!point_equal(act(f, p), act_direct(f, p)))
                                               return Json{{"f", op_doc(f)}, {"p", point_to_json(p)}};
                                           return Json();
                                       }));
    rep.results.push_back(
        run_property("stabilizer-roundtrip", seed, trials, [](std::mt19937_64& rng) {
            const FlagSchema& s = scenario_schema(names[uniform(rng, 0, 3)]);
            StructuredOperator f = random_upper_block_operator(s, rng, 5);
            IndexInterval w = f.window ? *f.window : IndexInterval{-1, 1};
            FlagPoint ref = reference_point(s, w);
            if (!in_stabilizer(f, ref)) return Json{{"f", op_doc(f)}};
            if (!point_equal(act(f, ref), ref)) return Json{{"f", op_doc(f)}};
            return Json();
        }));
    return rep;
}

SuiteReport suite_component_shift(std::uint64_t seed, long trials) {
    SuiteReport rep{"component-shift", seed, trials, {}};
    rep.results.push_back(run_property("shift-degree", seed, std::min(trials, 11L),
                                       [](std::mt19937_64& rng) {
                                           const FlagSchema& s = scenario_schema("sato");
                                           long k = uniform(rng, -5, 5);
                                           StructuredOperator sh = shift_op(s, k);
                                           if (degree_at_cut(sh, CutId{-1}) != k)
                                               return Json{{"k", k}};
                                           return Json();
                                       }));
    // A window that misses the cut declares the reference tail there, i.e.
    // offset zero.
    auto offset_at_cut = [](const FlagPoint& p) {
        auto pos = relative_position(p);
        return pos.empty() ? 0L : pos[0].second;
    };
    rep.results.push_back(
        run_property("component-moves-by-degree", seed, trials, [=](std::mt19937_64& rng) {
            const FlagSchema& s = scenario_schema("sato");
            long k = uniform(rng, -3, 3);
            StructuredOperator sh = shift_op(s, k);
            FlagPoint p = random_point(s, rng, 5, 1);
            if (offset_at_cut(act(sh, p)) != offset_at_cut(p) + k)
                return Json{{"k", k}, {"p", point_to_json(p)}};
            return Json();
        }));
    rep.results.push_back(
        run_property("general-degree-moves-component", seed, trials, [=](std::mt19937_64& rng) {
            const FlagSchema& s = scenario_schema("sato");
            StructuredOperator f = random_operator(s, rng, OperatorOptions{5, 2, true});
            FlagPoint p = random_point(s, rng, 5, 1);
            long deg = degree_at_cut(f, CutId{-1});
            if (offset_at_cut(act(f, p)) != offset_at_cut(p) + deg)
                return Json{{"deg", deg}, {"f", op_doc(f)}};
            return Json();
        }));
    return rep;
}

SuiteReport suite_duality(std::uint64_t seed, long trials) {
    SuiteReport rep{"duality", seed, trials, {}};
    rep.results.push_back(run_property("reference-fixed", seed, 1, [](std::mt19937_64&) {
        const FlagSchema& s = scenario_schema("sato");
        FlagPoint ref = reference_point(s, {-2, 2});
        if (!point_equal(duality_map(ref), ref)) return Json{{"reason", "sato reference moves"}};
        return Json();
    }));
    rep.results.push_back(run_property("involution", seed, trials, [](std::mt19937_64& rng) {
        static const char* names[4] = {"ex2_1", "ex2_3", "ex2_4", "ex2_5"};
        const FlagSchema& s = scenario_schema(names[uniform(rng, 0, 3)]);
        FlagPoint p = random_point(s, rng, 5, 1);
        FlagPoint back = duality_map(duality_map(p));
        if (!is_commensurable(back, p)) return Json{{"p", point_to_json(p)}};
        if (!point_equal(back, p)) return Json{{"reason", "not exactly equal"}};
        return Json();
    }));
    rep.results.push_back(run_property("asymmetric-rejected", seed, 1, [](std::mt19937_64&) {
        const FlagSchema& s = scenario_schema("ex2_2");
        FlagPoint ref = reference_point(s, {1, 4});
        try {
            duality_map(ref);
        } catch (const bad_input&) {
            return Json();
        }
        return Json{{"reason", "ex2_2 duality did not fail"}};
    }));
    return rep;
}

SuiteReport suite_example_scenarios(std::uint64_t seed, long trials) {
    SuiteReport rep{"example-2-scenarios", seed, trials, {}};
    static const char* names[5] = {"ex2_1", "ex2_2", "ex2_3", "ex2_4", "ex2_5"};
    for (const char* name : names) {
        rep.results.push_back(
            run_property(std::string("golden-agreement-") + name, seed, trials,
                         [name](std::mt19937_64& rng) {
                             const Scenario& sc = get_scenario(name);
                             StructuredOperator f =
                                 random_operator(sc.schema, rng, OperatorOptions{6, 2, true});
                             bool lib = is_w_aligned(f) && is_eligible(f);
                             bool gold = sc.golden_member(f);
                             if (lib != gold)
                                 return Json{{"library", lib}, {"golden", gold}, {"f", op_doc(f)}};
                             return Json();
                         }));
    }
    return rep;
}

SuiteReport suite_isotropic(std::uint64_t seed, long trials) {
    SuiteReport rep{"isotropic-equivalence", seed, trials, {}};
    static const FormKind forms[3] = {FormKind::OrthogonalAllInts, FormKind::OrthogonalSatoSplit,
                                      FormKind::SymplecticSatoSplit};
    auto schema_for = [](FormKind k) -> const FlagSchema& {
        return k == FormKind::OrthogonalAllInts ? scenario_schema("ex2_3")
                                                : scenario_schema("ex2_1");
    };
    rep.results.push_back(
        run_property("reflection-equivalence", seed, trials, [&](std::mt19937_64& rng) {
            FormSchema form{forms[uniform(rng, 0, 2)]};
            const FlagSchema& s = schema_for(form.kind);
            StructuredOperator f = uniform(rng, 0, 1)
                                       ? random_form_preserving(form, s, rng)
                                       : random_eligible_operator(s, rng, 5);
            if (preserves_form(f, form) != reflection_condition(f, form))
                return Json{{"form", form_name(form.kind)}, {"f", op_doc(f)}};
            return Json();
        }));
    rep.results.push_back(
        run_property("form-preserving-eligible", seed, trials, [&](std::mt19937_64& rng) {
            FormSchema form{forms[uniform(rng, 0, 2)]};
            const FlagSchema& s = schema_for(form.kind);
            StructuredOperator f = random_form_preserving(form, s, rng);
            if (!preserves_form(f, form)) return Json{{"reason", "generator broken"}};
            if (!is_w_aligned(f) || !is_eligible(f))
                return Json{{"form", form_name(form.kind)}, {"f", op_doc(f)}};
            return Json();
        }));
    rep.results.push_back(
        run_property("group-closure", seed, trials, [&](std::mt19937_64& rng) {
            FormSchema form{forms[uniform(rng, 0, 2)]};
            const FlagSchema& s = schema_for(form.kind);
            StructuredOperator f = random_form_preserving(form, s, rng);
            StructuredOperator g = random_form_preserving(form, s, rng);
            if (!preserves_form(compose(f, g), form))
                return Json{{"reason", "product"}, {"f", op_doc(f)}, {"g", op_doc(g)}};
            if (!preserves_form(invert_op(f), form))
                return Json{{"reason", "inverse"}, {"f", op_doc(f)}};
            return Json();
        }));
    rep.results.push_back(
        run_property("isotropic-points-preserved", seed, trials, [&](std::mt19937_64& rng) {
            FormSchema form{forms[uniform(rng, 0, 2)]};
            const FlagSchema& s = schema_for(form.kind);
            StructuredOperator f = random_form_preserving(form, s, rng);
            StructuredOperator g = random_form_preserving(form, s, rng);
            IndexInterval w = f.window ? *f.window : IndexInterval{-1, 1};
            FlagPoint p = act_direct(g, reference_point(s, w.unite(g.window ? *g.window : w)));
            if (!is_isotropic_flag(p, form)) return Json{{"reason", "seed point"}};
            if (!is_isotropic_flag(act_direct(f, p), form))
                return Json{{"f", op_doc(f)}, {"p", point_to_json(p)}};
            return Json();
        }));
    return rep;
}

SuiteReport suite_crossing_ranks(std::uint64_t seed, long trials) {
    SuiteReport rep{"crossing-ranks", seed, trials, {}};
    static const char* names[3] = {"sato", "ex2_3", "ex2_4"};
    rep.results.push_back(
        run_property("crossing-rank-transpose", seed, trials, [](std::mt19937_64& rng) {
            const FlagSchema& s = scenario_schema(names[uniform(rng, 0, 2)]);
            StructuredOperator f = random_operator(s, rng, OperatorOptions{6, 2, true});
            IndexInterval w = f.window ? *f.window : IndexInterval{-1, 1};
            for (CutId cut : report_cuts(s, w)) {
                CutSplitting sp = splitting_at_cut(f, cut);
                if (rank(sp.c) != rank(sp.c.transpose()))
                    return Json{{"cut", cut.after}, {"f", op_doc(f)}};
                CutSplitting dual_sp = splitting_at_cut(bar_op(f), cut);
                if (rank(sp.c) != rank(dual_sp.b))
                    return Json{{"reason", "dual block"}, {"cut", cut.after}, {"f", op_doc(f)}};
            }
            return Json();
        }));
    rep.results.push_back(run_property("bar-pairing", seed, trials, [](std::mt19937_64& rng) {
        const FlagSchema& s = scenario_schema(names[uniform(rng, 0, 2)]);
        StructuredOperator f = random_operator(s, rng, OperatorOptions{5, 2, true});
        SparseVec x = random_sparse(s.index_schema, rng);
        SparseVec y = random_sparse(s.index_schema, rng);
        if (sparse_pairing(apply_to_vector(bar_op(f), y), x) !=
            sparse_pairing(y, apply_to_vector(f, x)))
            return Json{{"f", op_doc(f)}};
        return Json();
    }));
    rep.results.push_back(
        run_property("bar-antihomomorphism", seed, trials, [](std::mt19937_64& rng) {
            const FlagSchema& s = scenario_schema(names[uniform(rng, 0, 2)]);
            StructuredOperator f = random_operator(s, rng, OperatorOptions{5, 2, true});
            StructuredOperator g = random_operator(s, rng, OperatorOptions{5, 2, true});
            if (!op_equal(bar_op(bar_op(f)), f)) return Json{{"reason", "involution"}};
            if (!op_equal(bar_op(compose(f, g)), compose(bar_op(g), bar_op(f))))
                return Json{{"reason", "antihomomorphism"}, {"f", op_doc(f)}, {"g", op_doc(g)}};
            return Json();
        }));
    return rep;
}

SuiteReport suite_stabilizer_degree(std::uint64_t seed, long trials) {
    SuiteReport rep{"stabilizer-degree", seed, trials, {}};
    static const char* names[4] = {"sato", "ex2_3", "ex2_4", "ex2_5"};
    rep.results.push_back(
        run_property("upper-block-degree-zero", seed, trials, [](std::mt19937_64& rng) {
            const FlagSchema& s = scenario_schema(names[uniform(rng, 0, 3)]);
            StructuredOperator f = random_upper_block_operator(s, rng, 5);
            for (const auto& [cut, deg] : degree_report(f).per_cut)
                if (deg != 0) return Json{{"cut", cut.after}, {"f", op_doc(f)}};
            if (!is_eligible(f)) return Json{{"reason", "not eligible"}, {"f", op_doc(f)}};
            return Json();
        }));
    rep.results.push_back(
        run_property("upper-block-stabilizes-reference", seed, trials, [](std::mt19937_64& rng) {
            const FlagSchema& s = scenario_schema(names[uniform(rng, 0, 3)]);
            StructuredOperator f = random_upper_block_operator(s, rng, 5);
            IndexInterval w = f.window ? *f.window : IndexInterval{-1, 1};
            FlagPoint ref = reference_point(s, w.extend(s.index_schema, 1));
            if (!in_stabilizer(f, ref)) return Json{{"f", op_doc(f)}};
            return Json();
        }));
    return rep;
}

SuiteReport suite_io_roundtrip(std::uint64_t seed, long trials) {
    SuiteReport rep{"io-roundtrip", seed, trials, {}};
    static const char* names[5] = {"ex2_1", "ex2_2", "ex2_3", "ex2_4", "ex2_5"};
    rep.results.push_back(run_property("normalize-idempotent", seed, trials,
                                       [](std::mt19937_64& rng) {
                                           const FlagSchema& s =
                                               scenario_schema(names[uniform(rng, 0, 4)]);
                                           StructuredOperator f =
                                               random_operator(s, rng, OperatorOptions{5, 2, true});
                                           FlagPoint p = random_point(s, rng, 5, 1);
                                           Json sj = schema_to_json(s);
                                           Json fj = operator_to_json(f);
                                           Json pj = point_to_json(p);
                                           if (schema_from_json(sj) != s)
                                               return Json{{"reason", "schema"}};
                                           StructuredOperator f2 = operator_from_json(fj, s);
                                           if (!op_equal(f, f2) ||
                                               operator_to_json(f2).dump() != fj.dump())
                                               return Json{{"reason", "operator"}};
                                           FlagPoint p2 = point_from_json(pj, s);
                                           if (!point_equal(p, p2) ||
                                               point_to_json(p2).dump() != pj.dump())
                                               return Json{{"reason", "point"}};
                                           return Json();
                                       }));
    return rep;
}

} // namespace

bool SuiteReport::all_pass() const {
    for (const auto& r : results)
        if (!r.pass) return false;
    return true;
}

Json SuiteReport::to_json() const {
    Json props = Json::array();
    for (const auto& r : results) {
        Json p{{"property", r.property}, {"pass", r.pass}, {"trials", r.trials}};
        if (!r.pass) p["counterexample"] = r.counterexample;
        props.push_back(std::move(p));
    }
    return Json{{"suite", suite},
                {"seed", seed},
                {"trials", trials},
                {"pass", all_pass()},
                {"properties", std::move(props)}};
}

SuiteReport run_suite(const std::string& name, std::uint64_t seed, long trials) {
    require(trials > 0, "trial count must be positive");
    if (name == "linear-core") return suite_linear_core(seed, trials);
    if (name == "schema-symmetry") return suite_schema_symmetry(seed, trials);
    if (name == "commensurability") return suite_commensurability(seed, trials);
    if (name == "degree-additivity") return suite_degree_additivity(seed, trials);
    if (name == "operator-representation") return suite_operator_representation(seed, trials);
    if (name == "eligibility-closure") return suite_eligibility_closure(seed, trials);
    if (name == "action-well-defined") return suite_action_well_defined(seed, trials);
    if (name == "oracle-equivalence") return suite_oracle_equivalence(seed, trials);
    if (name == "component-shift") return suite_component_shift(seed, trials);
    if (name == "duality") return suite_duality(seed, trials);
    if (name == "example-2-scenarios") return suite_example_scenarios(seed, trials);
    if (name == "isotropic-equivalence") return suite_isotropic(seed, trials);
    if (name == "crossing-ranks") return suite_crossing_ranks(seed, trials);
    if (name == "stabilizer-degree") return suite_stabilizer_degree(seed, trials);
    if (name == "io-roundtrip") return suite_io_roundtrip(seed, trials);
    std::string known;
    for (const auto& s : suite_names()) known += (known.empty() ? "" : ", ") + s;
    throw bad_input("unknown suite: " + name + " (known: " + known + ")");
}

std::vector<std::string> suite_names() {
    return {"linear-core",          "schema-symmetry",     "commensurability",
            "degree-additivity",    "operator-representation", "eligibility-closure",
            "action-well-defined",  "oracle-equivalence",  "component-shift",
            "duality",              "example-2-scenarios", "isotropic-equivalence",
            "crossing-ranks",       "stabilizer-degree",   "io-roundtrip"};
}

} // namespace genflag
