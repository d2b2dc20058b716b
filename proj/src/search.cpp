#include "crlab/search.hpp"

#include <algorithm>
#include <array>
#include <chrono>
#include <sstream>

#include "crlab/errors.hpp"
#include "crlab/parallel.hpp"

namespace crlab {

namespace {

constexpr int kMaxCells = 16;

// -------------------------------------------------------------------------
// Extension search.
//
// Normalization at J_r reduces the problem to translation subspaces V of
// F^(n*p) with  rank(J_r + v) = r  for every nonzero v in V (containment of
// J_r costs nothing up to equivalence, and the element condition is exactly
// constant rank of J_r + V).  That membership condition is hereditary, so the
// good subspaces form a downward-closed family which we enumerate exactly
// once each through greedy generator chains:
//
//   the chain of V is g_1 < g_2 < ... < g_m, where g_i is the smallest
//   canonical direction (first nonzero coordinate scaled to 1, compared by
//   lexicographic index) in V outside span(g_1..g_{i-1}).
//
// Every prefix of a chain is the chain of its own span, so depth-first
// extension with the rules "new generator d exceeds the last one" and "no
// element of (V + Fd) \ V has canonical representative below d" visits each
// good subspace exactly once.  Coverage is exhaustive, which is what makes
// the reported maximum a certificate.
// -------------------------------------------------------------------------

struct PackedVec {
    long long idx = 0;
    std::array<std::uint8_t, kMaxCells> dig{};
};

struct Instance {
    Field field;
    Field::Tables ft;
    int n, p, r, np;
    std::uint64_t q;
    long long total; // q^np
    std::vector<std::uint8_t> rank_ok; // 1 iff rank(J_r + v) == r

    Instance(const Field& f, int n_, int p_, int r_)
        : field(f), ft(f.tables()), n(n_), p(p_), r(r_), np(n_ * p_), q(f.order()), total(1) {}

    void decode(long long idx, std::uint8_t* dig) const {
        for (int i = np; i-- > 0;) {
            dig[i] = static_cast<std::uint8_t>(idx % static_cast<long long>(q));
            idx /= static_cast<long long>(q);
        }
    }
    long long encode(const std::uint8_t* dig) const {
        long long idx = 0;
        for (int i = 0; i < np; ++i) idx = idx * static_cast<long long>(q) + dig[i];
        return idx;
    }
    PackedVec make(long long idx) const {
        PackedVec v;
        v.idx = idx;
        decode(idx, v.dig.data());
        return v;
    }
    PackedVec add(const PackedVec& a, const PackedVec& b) const {
        PackedVec w;
        for (int i = 0; i < np; ++i) w.dig[static_cast<std::size_t>(i)] = static_cast<std::uint8_t>(
            ft.addf(a.dig[static_cast<std::size_t>(i)], b.dig[static_cast<std::size_t>(i)]));
        w.idx = encode(w.dig.data());
        return w;
    }
    PackedVec scale(const PackedVec& a, Elt c) const {
        PackedVec w;
        for (int i = 0; i < np; ++i)
            w.dig[static_cast<std::size_t>(i)] = static_cast<std::uint8_t>(ft.mulf(a.dig[static_cast<std::size_t>(i)], c));
        w.idx = encode(w.dig.data());
        return w;
    }
    // Canonical projective representative: scale so the first nonzero
    // coordinate is 1; returns its index.
    long long rep_index(const PackedVec& a) const {
        int fnz = 0;
        while (fnz < np && a.dig[static_cast<std::size_t>(fnz)] == 0) ++fnz;
        if (fnz == np) return 0;
        const Elt lead = a.dig[static_cast<std::size_t>(fnz)];
        if (lead == 1) return a.idx;
        const Elt c = ft.invf(lead);
        long long idx = 0;
        for (int i = 0; i < np; ++i)
            idx = idx * static_cast<long long>(q) + ft.mulf(a.dig[static_cast<std::size_t>(i)], c);
        return idx;
    }

    // Rank of J_r + v without allocations.
    int shifted_rank(const std::uint8_t* dig) const {
        Elt buf[kMaxCells];
        for (int i = 0; i < np; ++i) buf[i] = dig[i];
        for (int i = 0; i < r; ++i) buf[i * p + i] = ft.addf(buf[i * p + i], 1);
        int rk = 0;
        for (int col = 0; col < p && rk < n; ++col) {
            int piv = rk;
            while (piv < n && buf[piv * p + col] == 0) ++piv;
            if (piv == n) continue;
            if (piv != rk)
                for (int j = col; j < p; ++j) std::swap(buf[rk * p + j], buf[piv * p + j]);
            const Elt ipv = ft.invf(buf[rk * p + col]);
            for (int i = rk + 1; i < n; ++i) {
                const Elt c = ft.mulf(buf[i * p + col], ipv);
                if (c == 0) continue;
                for (int j = col; j < p; ++j)
                    buf[i * p + j] = ft.addf(buf[i * p + j], ft.negf(ft.mulf(c, buf[rk * p + j])));
            }
            ++rk;
        }
        return rk;
    }

    // Flanders-Atkinson identities of a single direction: D = 0 and
    // B A^k C = 0 for k < r.  Necessary for line goodness when q > r+1.
    bool fa_ok(const std::uint8_t* dig) const {
        for (int i = r; i < n; ++i)
            for (int j = r; j < p; ++j)
                if (dig[i * p + j] != 0) return false;
        if (p == r || n == r) return true;
        Elt cur[kMaxCells]; // A^k C, r x (p-r)
        const int cc = p - r;
        for (int i = 0; i < r; ++i)
            for (int j = 0; j < cc; ++j) cur[i * cc + j] = dig[i * p + r + j];
        for (int k = 0; k < r; ++k) {
            for (int bi = r; bi < n; ++bi) {
                for (int j = 0; j < cc; ++j) {
                    Elt acc = 0;
                    for (int c = 0; c < r; ++c)
                        acc = ft.addf(acc, ft.mulf(dig[bi * p + c], cur[c * cc + j]));
                    if (acc != 0) return false;
                }
            }
            if (k + 1 == r) break;
            Elt next[kMaxCells];
            for (int i = 0; i < r; ++i) {
                for (int j = 0; j < cc; ++j) {
                    Elt acc = 0;
                    for (int c = 0; c < r; ++c)
                        acc = ft.addf(acc, ft.mulf(dig[i * p + c], cur[c * cc + j]));
                    next[i * cc + j] = acc;
                }
            }
            std::copy(next, next + r * cc, cur);
        }
        return true;
    }
};

constexpr std::uint64_t kMaxSearchOrder = 16;

struct BestSpace {
    int dim = 0;
    std::vector<long long> gens; // lexicographically least chain at that dim

    void consider(int d, const std::vector<long long>& g) {
        if (d > dim) {
            dim = d;
            gens = g;
        }
        // Equal depth within one worker arrives in ascending chain order, so
        // the first hit is already the lexicographic minimum.
    }
    void merge(const BestSpace& o) {
        if (o.dim > dim || (o.dim == dim && o.dim > 0 && (gens.empty() || o.gens < gens)))
            *this = o;
    }
};

struct DfsResult {
    BestSpace best;
    long long nodes = 0;
};

class ExtensionSearch {
public:
    ExtensionSearch(Instance& inst, int threads, bool fa_prune)
        : inst_(inst), threads_(threads), fa_prune_(fa_prune) {}

    DfsResult run() {
        build_flags();
        build_candidates();
        DfsResult init;
        init.nodes = 1; // the dim-0 space {J_r}
        return parallel_blocks<DfsResult>(
            static_cast<long long>(roots_.size()), threads_, init,
            [this](long long b, long long e) {
                DfsResult local;
                for (long long i = b; i < e; ++i) first_level(static_cast<int>(i), local);
                return local;
            },
            [](DfsResult& acc, const DfsResult& part) {
                acc.best.merge(part.best);
                acc.nodes += part.nodes;
            });
    }

    bool fa_pruned() const { return fa_prune_; }

private:
    Instance& inst_;
    int threads_;
    bool fa_prune_;
    std::vector<PackedVec> roots_; // good directions, canonical, ascending

    void build_flags() {
        inst_.rank_ok.assign(static_cast<std::size_t>(inst_.total), 0);
        parallel_blocks<int>(
            inst_.total, threads_, 0,
            [this](long long b, long long e) {
                std::uint8_t dig[kMaxCells];
                for (long long i = b; i < e; ++i) {
                    inst_.decode(i, dig);
                    inst_.rank_ok[static_cast<std::size_t>(i)] =
                        inst_.shifted_rank(dig) == inst_.r ? 1 : 0;
                }
                return 0;
            },
            [](int&, int) {});
    }

    // Canonical directions whose whole line keeps J_r at rank r, optionally
    // pre-filtered by the Flanders-Atkinson identities.
    void build_candidates() {
        using Part = std::vector<PackedVec>;
        Part all = parallel_blocks<Part>(
            inst_.total - 1, threads_, Part{},
            [this](long long b, long long e) {
                Part local;
                std::uint8_t dig[kMaxCells];
                for (long long i = b + 1; i < e + 1; ++i) {
                    inst_.decode(i, dig);
                    int fnz = 0;
                    while (dig[fnz] == 0) ++fnz;
                    if (dig[fnz] != 1) continue; // not the canonical representative
                    if (fa_prune_ && !inst_.fa_ok(dig)) continue;
                    PackedVec v = inst_.make(i);
                    bool good = true;
                    for (Elt c = 1; c < inst_.q && good; ++c)
                        good = inst_.rank_ok[static_cast<std::size_t>(inst_.scale(v, c).idx)] != 0;
                    if (good) local.push_back(v);
                }
                return local;
            },
            [](Part& acc, const Part& part) { acc.insert(acc.end(), part.begin(), part.end()); });
        roots_ = std::move(all); // index order is ascending by construction
    }

    // The line spanned by roots_[i] as a level-1 node; candidate pool is the
    // whole tail of the direction list, filtered against this node.
    void first_level(int i, DfsResult& out) {
        const PackedVec& d = roots_[static_cast<std::size_t>(i)];
        std::vector<PackedVec> elems;
        for (Elt c = 1; c < inst_.q; ++c) elems.push_back(inst_.scale(d, c));
        ++out.nodes;
        std::vector<long long> gens{d.idx};
        out.best.consider(1, gens);
        std::vector<int> cands;
        for (std::size_t j = static_cast<std::size_t>(i) + 1; j < roots_.size(); ++j)
            if (compatible(elems, roots_[j])) cands.push_back(static_cast<int>(j));
        node_dfs(elems, gens, cands, out);
    }

    // `cands` have already been validated against the current node, so each
    // one is a legal extension; build the child, refilter, recurse.
    void node_dfs(std::vector<PackedVec>& elems, std::vector<long long>& gens,
                  const std::vector<int>& cands, DfsResult& out) {
        for (std::size_t ci = 0; ci < cands.size(); ++ci) {
            const PackedVec& d = roots_[static_cast<std::size_t>(cands[ci])];
            std::vector<PackedVec> fresh; // (V + Fd) \ V, all known good
            fresh.reserve((elems.size() + 1) * (inst_.q - 1));
            PackedVec scaled[kMaxSearchOrder];
            for (Elt c = 1; c < inst_.q; ++c) {
                scaled[c] = inst_.scale(d, c);
                fresh.push_back(scaled[c]);
            }
            for (const auto& v : elems)
                for (Elt c = 1; c < inst_.q; ++c) fresh.push_back(inst_.add(v, scaled[c]));
            ++out.nodes;
            gens.push_back(d.idx);
            out.best.consider(static_cast<int>(gens.size()), gens);
            // Compatibility with the old elements is inherited from the
            // parent filter, so only the fresh elements need rechecking.
            std::vector<int> next;
            for (std::size_t cj = ci + 1; cj < cands.size(); ++cj)
                if (compatible(fresh, roots_[static_cast<std::size_t>(cands[cj])]))
                    next.push_back(cands[cj]);
            const std::size_t old_size = elems.size();
            elems.insert(elems.end(), fresh.begin(), fresh.end());
            node_dfs(elems, gens, next, out);
            elems.resize(old_size);
            gens.pop_back();
        }
    }

    // Would extending by d2 keep every element good and keep d2 the smallest
    // new representative?  A zero sum means d2 already lies in the space.
    bool compatible(const std::vector<PackedVec>& against, const PackedVec& d2) const {
        PackedVec scaled[kMaxSearchOrder];
        for (Elt c = 1; c < inst_.q; ++c) scaled[c] = inst_.scale(d2, c);
        for (const auto& v : against) {
            for (Elt c = 1; c < inst_.q; ++c) {
                PackedVec w = inst_.add(v, scaled[c]);
                if (w.idx == 0 || inst_.rank_ok[static_cast<std::size_t>(w.idx)] == 0) return false;
                if (inst_.rep_index(w) < d2.idx) return false;
            }
        }
        return true;
    }
};

// -------------------------------------------------------------------------
// Exhaustive mode: raw affine subspaces, one echelon basis per subspace and
// one canonical representative per coset (zeros at the pivot coordinates).
// -------------------------------------------------------------------------

struct ExhaustiveHit {
    long long subspace_index = -1;
    long long coset_index = -1;
    std::optional<AffineSpace> space;
    long long examined = 0;
};

ExhaustiveHit find_space_of_dim(const Field& f, int n, int p, int r, int d, long long cap,
                                int threads) {
    const int np = n * p;
    const long long sub_count = gaussian_binomial(f.order(), np, d);
    long long cosets = 1;
    for (int i = 0; i < np - d; ++i) {
        cosets *= static_cast<long long>(f.order());
        if (cosets > cap) throw ResourceError("exhaustive search: coset count exceeds the cap");
    }
    if (sub_count > cap || sub_count > cap / cosets)
        throw ResourceError("exhaustive search: " + std::to_string(sub_count) + " x " +
                            std::to_string(cosets) + " affine spaces exceed the cap");
    const std::vector<VectorSubspace> subs = enumerate_subspaces(f, np, d, cap);
    const std::uint64_t q = f.order();

    ExhaustiveHit init;
    return parallel_blocks<ExhaustiveHit>(
        static_cast<long long>(subs.size()), threads, init,
        [&](long long b, long long e) {
            ExhaustiveHit local;
            for (long long si = b; si < e && local.subspace_index < 0; ++si) {
                const VectorSubspace& v = subs[static_cast<std::size_t>(si)];
                std::vector<int> pivots;
                std::vector<int> free_pos;
                {
                    std::vector<bool> is_piv(static_cast<std::size_t>(np), false);
                    for (const auto& row : v.basis()) {
                        for (int j = 0; j < np; ++j)
                            if (row[static_cast<std::size_t>(j)] != 0) {
                                pivots.push_back(j);
                                is_piv[static_cast<std::size_t>(j)] = true;
                                break;
                            }
                    }
                    for (int j = 0; j < np; ++j)
                        if (!is_piv[static_cast<std::size_t>(j)]) free_pos.push_back(j);
                }
                std::vector<Matrix> basis;
                for (const auto& row : v.basis()) basis.push_back(Matrix::from_flat(f, n, p, row));
                for (long long ci = 0; ci < cosets; ++ci) {
                    ++local.examined;
                    std::vector<Elt> base_flat(static_cast<std::size_t>(np), 0);
                    long long rem = ci;
                    for (std::size_t t = free_pos.size(); t-- > 0;) {
                        base_flat[static_cast<std::size_t>(free_pos[t])] =
                            static_cast<Elt>(rem % static_cast<long long>(q));
                        rem /= static_cast<long long>(q);
                    }
                    AffineSpace cand(Matrix::from_flat(f, n, p, base_flat), basis);
                    bool all_rank_r = true;
                    const long long count = cand.element_count(cap);
                    for (long long i = 0; i < count && all_rank_r; ++i)
                        all_rank_r = rank(cand.element_at(i)) == r;
                    if (all_rank_r) {
                        local.subspace_index = si;
                        local.coset_index = ci;
                        local.space = cand;
                        break;
                    }
                }
            }
            return local;
        },
        [](ExhaustiveHit& acc, const ExhaustiveHit& part) {
            acc.examined += part.examined;
            if (acc.subspace_index < 0 && part.subspace_index >= 0) {
                acc.subspace_index = part.subspace_index;
                acc.coset_index = part.coset_index;
                acc.space = part.space;
            }
        });
}

long long formula_dim(int n, int r) {
    return static_cast<long long>(r) * (r - 1) / 2 + static_cast<long long>(r) * (n - r);
}

SearchVerdict verdict_for(int found, long long formula) {
    if (found < 0) return SearchVerdict::not_certified;
    if (found == formula) return SearchVerdict::matches_formula;
    return found > formula ? SearchVerdict::exceeds_formula : SearchVerdict::below_formula;
}

} // namespace

const char* to_string(SearchMode m) {
    return m == SearchMode::extension ? "extension" : "exhaustive";
}

const char* to_string(SearchVerdict v) {
    switch (v) {
        case SearchVerdict::matches_formula: return "matches_formula";
        case SearchVerdict::exceeds_formula: return "exceeds_formula";
        case SearchVerdict::below_formula: return "below_formula";
        default: return "not_certified";
    }
}

SearchOptions::SearchOptions()
    : cap(config::max_enum()), threads(config::threads()), fa_prune(true) {}

std::string SearchReport::to_string() const {
    std::ostringstream os;
    os << "instance: q=" << q << " n=" << n << " p=" << p << " r=" << r << "\n"
       << "mode: " << crlab::to_string(mode) << (fa_prune_used ? " (fa pruning)" : "") << "\n"
       << "found_max_dim: " << found_max_dim << "\n"
       << "formula_value: " << formula_value << "\n"
       << "verdict: " << crlab::to_string(verdict) << "\n"
       << "spaces_examined: " << spaces_examined << "\n"
       << "elapsed_seconds: " << elapsed_seconds;
    if (!detail.empty()) os << "\ndetail: " << detail;
    return os.str();
}

SearchReport search_max_dim(const Field& f, int n, int p, int r, const SearchOptions& opts) {
    if (!(n >= p && p >= r && r >= 1)) throw UsageError("search_max_dim: need n >= p >= r >= 1");
    if (n * p > kMaxCells) throw UsageError("search_max_dim: shapes beyond 16 cells are unsupported");
    const auto start = std::chrono::steady_clock::now();
    SearchReport rep;
    rep.q = f.order();
    rep.n = n;
    rep.p = p;
    rep.r = r;
    rep.mode = opts.mode;
    rep.formula_value = formula_dim(n, r);
    const bool fa_valid = f.order() > static_cast<std::uint64_t>(r) + 1;
    rep.fa_prune_used = opts.mode == SearchMode::extension && opts.fa_prune && fa_valid;

    auto finish = [&](SearchReport& out) {
        out.elapsed_seconds =
            std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        return out;
    };

    if (opts.mode == SearchMode::extension) {
        if (f.order() > kMaxSearchOrder)
            throw UsageError("search_max_dim: extension mode supports q <= 16");
        Instance inst(f, n, p, r);
        for (int i = 0; i < inst.np; ++i) {
            inst.total *= static_cast<long long>(inst.q);
            if (inst.total > opts.cap) {
                rep.detail = "q^(n*p) exceeds the cap; nothing certified";
                return finish(rep);
            }
        }
        ExtensionSearch search(inst, opts.threads, rep.fa_prune_used);
        DfsResult res = search.run();
        rep.spaces_examined = res.nodes;
        rep.found_max_dim = res.best.dim;
        std::vector<Matrix> basis;
        for (long long g : res.best.gens) {
            std::uint8_t dig[kMaxCells];
            inst.decode(g, dig);
            std::vector<Elt> flat(dig, dig + inst.np);
            basis.push_back(Matrix::from_flat(f, n, p, flat));
        }
        AffineSpace example(Matrix::j_r(f, n, p, r), basis);
        CheckResult recheck = constant_rank(example, r, EnumOptions(opts.cap, opts.threads));
        if (!recheck.ok())
            throw InvariantViolation("search_max_dim: the found space failed re-verification");
        rep.example_space = std::move(example);
        rep.verdict = verdict_for(rep.found_max_dim, rep.formula_value);
        return finish(rep);
    }

    // Exhaustive mode: bracket the maximum starting at formula + 1.  A space
    // of dimension d contains spaces of every smaller dimension, so existence
    // is monotone and the bracket is a certificate.
    try {
        int d = static_cast<int>(rep.formula_value) + 1;
        std::optional<AffineSpace> best_space;
        ExhaustiveHit hit = find_space_of_dim(f, n, p, r, d, opts.cap, opts.threads);
        rep.spaces_examined += hit.examined;
        if (hit.space) {
            best_space = hit.space;
            while (true) {
                ++d;
                ExhaustiveHit up = find_space_of_dim(f, n, p, r, d, opts.cap, opts.threads);
                rep.spaces_examined += up.examined;
                if (!up.space) break;
                best_space = up.space;
            }
            rep.found_max_dim = d - 1;
        } else {
            while (true) {
                --d;
                if (d < 0) break;
                ExhaustiveHit down = find_space_of_dim(f, n, p, r, d, opts.cap, opts.threads);
                rep.spaces_examined += down.examined;
                if (down.space) {
                    best_space = down.space;
                    break;
                }
            }
            rep.found_max_dim = d;
        }
        if (best_space) {
            CheckResult recheck = constant_rank(*best_space, r, EnumOptions(opts.cap, opts.threads));
            if (!recheck.ok())
                throw InvariantViolation("search_max_dim: the found space failed re-verification");
            rep.example_space = std::move(best_space);
        }
        rep.verdict = verdict_for(rep.found_max_dim, rep.formula_value);
    } catch (const ResourceError& e) {
        rep.found_max_dim = -1;
        rep.verdict = SearchVerdict::not_certified;
        rep.detail = e.what();
    }
    return finish(rep);
}

CheckResult certify_no_dim(const Field& f, int n, int p, int r, int d, const EnumOptions& opts) {
    if (!(n >= p && p >= r && r >= 1) || d < 0) throw UsageError("certify_no_dim: bad instance");
    ExhaustiveHit hit = find_space_of_dim(f, n, p, r, d, opts.cap, opts.threads);
    CheckResult res;
    res.instances_checked = hit.examined;
    if (hit.space) {
        res.verdict = Verdict::violated;
        res.counterexample = hit.space->base();
        std::ostringstream os;
        os << "constant-rank-" << r << " space of dimension " << d << " found: base\n"
           << hit.space->base().to_string() << "\nbasis:";
        for (const auto& b : hit.space->basis()) os << "\n" << b.to_string() << "\n---";
        res.detail = os.str();
    } else {
        res.verdict = Verdict::holds;
        res.detail = "no dimension-" + std::to_string(d) + " affine subspace has constant rank " +
                     std::to_string(r);
    }
    return res;
}

SearchReport probe_small_field(const Field& f, int n, int p, int r, const SearchOptions& opts) {
    SearchOptions probe_opts = opts;
    probe_opts.fa_prune = false; // the identities assume q > r+1; never prune here
    SearchReport rep = search_max_dim(f, n, p, r, probe_opts);
    rep.detail = rep.detail.empty()
                     ? "small-field probe: certified search outcome only, no formula claim"
                     : rep.detail;
    return rep;
}

} // namespace crlab
