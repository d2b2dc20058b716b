// crlab: construct, verify, analyze, and search affine spaces of
// constant-rank matrices over small finite fields.

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "crlab/analyze.hpp"
#include "crlab/config.hpp"
#include "crlab/construct.hpp"
#include "crlab/errors.hpp"
#include "crlab/search.hpp"
#include "crlab/serialize.hpp"
#include "crlab/verify.hpp"

namespace {

using namespace crlab;
using Json = nlohmann::ordered_json;

constexpr int kExitOk = 0;
constexpr int kExitViolated = 1;
constexpr int kExitUsage = 2;
constexpr int kExitResource = 3;

struct CommonOpts {
    long long cap = 0; // 0: environment default
    int threads = 0;
    EnumOptions enum_opts() const {
        EnumOptions o;
        if (cap > 0) o.cap = cap;
        if (threads > 0) o.threads = threads;
        return o;
    }
};

void add_common(CLI::App* cmd, CommonOpts& c) {
    cmd->add_option("--cap", c.cap, "Enumeration cap (default: CRLAB_MAX_ENUM)");
    cmd->add_option("--threads", c.threads, "Worker count (default: CRLAB_THREADS or hardware)");
}

Field make_field(long long q, long long k, const std::string& modulus_csv) {
    if (q < 2) throw UsageError("--q must be a prime power >= 2");
    Field by_order = Field::of_order(static_cast<std::uint64_t>(q));
    if (k > 0 && static_cast<std::uint32_t>(k) != by_order.degree())
        throw UsageError("--k disagrees with the factorization of --q");
    if (modulus_csv.empty()) return by_order;
    std::vector<Elt> coeffs;
    std::stringstream ss(modulus_csv);
    std::string tok;
    while (std::getline(ss, tok, ',')) coeffs.push_back(static_cast<Elt>(std::stoul(tok)));
    return Field(by_order.characteristic(), by_order.degree(), coeffs);
}

std::string slurp(const std::string& path) {
    if (path.empty() || path == "-") {
        std::ostringstream buf;
        buf << std::cin.rdbuf();
        return buf.str();
    }
    std::ifstream in(path);
    if (!in) throw UsageError("cannot open " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

AffineSpace load_space(const std::string& path) {
    return parse_space(slurp(path), &std::cerr);
}

void emit_space(const AffineSpace& s, const std::string& out_path) {
    if (out_path.empty() || out_path == "-") {
        write_space(std::cout, s);
        return;
    }
    std::ofstream out(out_path);
    if (!out) throw UsageError("cannot write " + out_path);
    write_space(out, s);
}

// "nt:2" or "file:path.json"
AffineSpace parse_space_spec(const std::string& spec, const Field& f) {
    const auto colon = spec.find(':');
    const std::string kind = spec.substr(0, colon);
    const std::string arg = colon == std::string::npos ? "" : spec.substr(colon + 1);
    if (kind == "nt") return nt_space(f, std::stoi(arg));
    if (kind == "file") return load_space(arg);
    throw UsageError("unknown space spec '" + spec + "' (expected nt:<r> or file:<path>)");
}

// "i2" (identity form) or "diag:1,2"
Matrix parse_form_spec(const std::string& spec, const Field& f) {
    if (!spec.empty() && spec[0] == 'i' && spec.find(':') == std::string::npos)
        return Matrix::identity(f, std::stoi(spec.substr(1)));
    if (spec.rfind("diag:", 0) == 0) {
        std::vector<Elt> diag;
        std::stringstream ss(spec.substr(5));
        std::string tok;
        while (std::getline(ss, tok, ',')) diag.push_back(static_cast<Elt>(std::stoul(tok)));
        Matrix m(f, static_cast<int>(diag.size()), static_cast<int>(diag.size()));
        for (std::size_t i = 0; i < diag.size(); ++i)
            m.set(static_cast<int>(i), static_cast<int>(i), diag[i]);
        return m;
    }
    throw UsageError("unknown form spec '" + spec + "' (expected i<s> or diag:<a,b,...>)");
}

std::vector<std::string> split_csv(const std::string& text) {
    std::vector<std::string> out;
    std::stringstream ss(text);
    std::string tok;
    while (std::getline(ss, tok, ',')) out.push_back(tok);
    return out;
}

VectorSubspace parse_vector_list(const std::string& text, const Field& f, int ambient) {
    std::vector<std::vector<Elt>> vecs;
    std::stringstream ss(text);
    std::string vec_tok;
    while (std::getline(ss, vec_tok, ';')) {
        std::vector<Elt> v;
        std::stringstream vs(vec_tok);
        std::string cell;
        while (std::getline(vs, cell, ',')) v.push_back(static_cast<Elt>(std::stoul(cell)));
        if (static_cast<int>(v.size()) != ambient)
            throw UsageError("vector '" + vec_tok + "' has wrong length");
        vecs.push_back(std::move(v));
    }
    return VectorSubspace::span(f, ambient, vecs);
}

Json report_to_json(const SearchReport& rep) {
    Json j;
    j["q"] = rep.q;
    j["n"] = rep.n;
    j["p"] = rep.p;
    j["rank"] = rep.r;
    j["mode"] = to_string(rep.mode);
    j["fa_prune"] = rep.fa_prune_used;
    j["found_max_dim"] = rep.found_max_dim;
    j["formula_value"] = rep.formula_value;
    j["verdict"] = to_string(rep.verdict);
    j["spaces_examined"] = rep.spaces_examined;
    j["elapsed_seconds"] = rep.elapsed_seconds;
    if (rep.example_space) j["example_space"] = Json::parse(space_to_json(*rep.example_space));
    if (!rep.detail.empty()) j["detail"] = rep.detail;
    return j;
}

int exit_code_for(const CheckResult& res) {
    return res.verdict == Verdict::violated ? kExitViolated : kExitOk;
}

int run(int argc, char** argv) {
    CLI::App app{"constant-rank matrix space laboratory"};
    app.require_subcommand(1);

    // ----- formulas -----------------------------------------------------
    auto* formulas_cmd = app.add_subcommand("formulas", "Reference dimension formulas");
    int fo_rows = 0, fo_cols = 0, fo_rank = 0;
    formulas_cmd->add_option("--rows", fo_rows)->required();
    formulas_cmd->add_option("--cols", fo_cols)->required();
    formulas_cmd->add_option("--rank", fo_rank)->required();

    // ----- construct ----------------------------------------------------
    auto* construct_cmd = app.add_subcommand("construct", "Emit a constructed space");
    std::string co_kind, co_inner, co_m = "none", co_n = "none", co_parts, co_forms, co_out,
                co_modulus;
    long long co_q = 0, co_k = 0;
    int co_rank = 0, co_size = 0, co_rows = 0, co_cols = 0;
    CommonOpts co_common;
    construct_cmd->add_option("--kind", co_kind,
                              "nt | alternating | joint | tilde | wedge | optimal-from-forms")
        ->required();
    construct_cmd->add_option("--q", co_q, "Field order")->required();
    construct_cmd->add_option("--k", co_k, "Field degree (consistency check)");
    construct_cmd->add_option("--modulus", co_modulus, "Modulus coefficients, little-endian csv");
    construct_cmd->add_option("--rank", co_rank, "r for nt");
    construct_cmd->add_option("--size", co_size, "s for alternating");
    construct_cmd->add_option("--rows", co_rows);
    construct_cmd->add_option("--cols", co_cols);
    construct_cmd->add_option("--inner", co_inner, "Inner space for tilde (nt:<r> or file:<path>)");
    construct_cmd->add_option("--m", co_m, "Wedge M factor (nt:<r>, file:<path>, none)");
    construct_cmd->add_option("--n", co_n, "Wedge N factor (nt:<r>, file:<path>, none)");
    construct_cmd->add_option("--parts", co_parts, "Joint factors, comma separated specs");
    construct_cmd->add_option("--forms", co_forms, "Forms, comma separated (i<s> | diag:a,b)");
    construct_cmd->add_option("--out", co_out, "Output path (default stdout)");
    add_common(construct_cmd, co_common);

    // ----- verify ---------------------------------------------------------
    auto* verify_cmd = app.add_subcommand("verify", "Run a check against a space");
    std::string ve_check, ve_space = "-", ve_left, ve_right;
    int ve_rank = -1;
    long long ve_sample = 0;
    CommonOpts ve_common;
    verify_cmd
        ->add_option("--check", ve_check,
                     "constant-rank | fa | optimal | trivial-spectrum | transitivity | adapted | "
                     "ortho | unique-ortho")
        ->required();
    verify_cmd->add_option("--space", ve_space, "Space file (default: stdin)");
    verify_cmd->add_option("--rank", ve_rank, "Rank for constant-rank / fa / unique-ortho");
    verify_cmd->add_option("--sample", ve_sample, "Sampling mode draw count (constant-rank)");
    verify_cmd->add_option("--left", ve_left, "Row-side vectors 'a,b,..;c,d,..' (ortho)");
    verify_cmd->add_option("--right", ve_right, "Column-side vectors (ortho)");
    add_common(verify_cmd, ve_common);

    // ----- invariants -----------------------------------------------------
    auto* invariants_cmd = app.add_subcommand("invariants", "Print the (s, t) signature");
    std::string in_space = "-";
    int in_rank = -1;
    bool in_assume = false;
    CommonOpts in_common;
    invariants_cmd->add_option("--space", in_space);
    invariants_cmd->add_option("--rank", in_rank, "Constant rank (default: rank of the base)");
    invariants_cmd->add_flag("--assume-constant-rank", in_assume,
                             "Skip the certifying constant-rank check");
    add_common(invariants_cmd, in_common);

    // ----- decompose ------------------------------------------------------
    auto* decompose_cmd = app.add_subcommand("decompose", "Recover the wedge decomposition");
    std::string de_space = "-", de_out = "decomposition";
    int de_rank = -1;
    CommonOpts de_common;
    decompose_cmd->add_option("--space", de_space);
    decompose_cmd->add_option("--rank", de_rank, "Constant rank (default: rank of the base)");
    decompose_cmd->add_option("--out", de_out, "Output file prefix");
    add_common(decompose_cmd, de_common);

    // ----- equiv ----------------------------------------------------------
    auto* equiv_cmd = app.add_subcommand("equiv", "Equivalence of two spaces");
    std::string eq_a, eq_b;
    bool eq_exhaustive = false;
    CommonOpts eq_common;
    equiv_cmd->add_option("--a", eq_a)->required();
    equiv_cmd->add_option("--b", eq_b)->required();
    equiv_cmd->add_flag("--exhaustive", eq_exhaustive, "Brute-force witness search");
    add_common(equiv_cmd, eq_common);

    // ----- search / probe-small-field -------------------------------------
    auto add_search_opts = [](CLI::App* cmd, long long& q, long long& k, int& rows, int& cols,
                              int& rank, std::string& mode, bool& json, CommonOpts& common) {
        cmd->add_option("--q", q, "Field order")->required();
        cmd->add_option("--k", k, "Field degree (consistency check)");
        cmd->add_option("--rows", rows)->required();
        cmd->add_option("--cols", cols)->required();
        cmd->add_option("--rank", rank)->required();
        cmd->add_option("--mode", mode, "extension | exhaustive");
        cmd->add_flag("--json", json, "Emit the report as JSON");
        add_common(cmd, common);
    };
    auto* search_cmd = app.add_subcommand("search", "Certified maximal-dimension search");
    long long se_q = 0, se_k = 0;
    int se_rows = 0, se_cols = 0, se_rank = 0;
    std::string se_mode = "extension";
    bool se_json = false;
    CommonOpts se_common;
    add_search_opts(search_cmd, se_q, se_k, se_rows, se_cols, se_rank, se_mode, se_json, se_common);

    auto* probe_cmd = app.add_subcommand("probe-small-field",
                                         "Search probe for fields with q <= r+1");
    long long pr_q = 0, pr_k = 0;
    int pr_rows = 0, pr_cols = 0, pr_rank = 0;
    std::string pr_mode = "extension";
    bool pr_json = false;
    CommonOpts pr_common;
    add_search_opts(probe_cmd, pr_q, pr_k, pr_rows, pr_cols, pr_rank, pr_mode, pr_json, pr_common);

    CLI11_PARSE(app, argc, argv);

    if (formulas_cmd->parsed()) {
        ReferenceDims d = reference_dims(fo_rows, fo_cols, fo_rank);
        std::cout << "d_eq=" << d.d_eq << "\nd_le=" << d.d_le << "\nd_ge=" << d.d_ge << "\n";
        return kExitOk;
    }

    if (construct_cmd->parsed()) {
        const Field f = make_field(co_q, co_k, co_modulus);
        const EnumOptions opts = co_common.enum_opts();
        std::optional<AffineSpace> built;
        if (co_kind == "nt") {
            built = nt_space(f, co_rank);
        } else if (co_kind == "alternating") {
            built = AffineSpace(Matrix(f, co_size, co_size), alternating_basis(f, co_size));
        } else if (co_kind == "joint") {
            std::vector<AffineSpace> parts;
            for (const auto& spec : split_csv(co_parts)) parts.push_back(parse_space_spec(spec, f));
            built = joint(parts);
        } else if (co_kind == "tilde") {
            built = tilde(parse_space_spec(co_inner, f), co_rows, co_cols);
        } else if (co_kind == "wedge") {
            std::optional<AffineSpace> m, n;
            if (co_m != "none") m = parse_space_spec(co_m, f);
            if (co_n != "none") n = parse_space_spec(co_n, f);
            built = wedge(m, n, co_rows, co_cols, opts);
        } else if (co_kind == "optimal-from-forms") {
            std::vector<Matrix> forms;
            for (const auto& spec : split_csv(co_forms)) forms.push_back(parse_form_spec(spec, f));
            built = optimal_from_forms(forms, opts);
        } else {
            throw UsageError("unknown construct kind '" + co_kind + "'");
        }
        emit_space(*built, co_out);
        return kExitOk;
    }

    if (verify_cmd->parsed()) {
        const AffineSpace s = load_space(ve_space);
        const EnumOptions opts = ve_common.enum_opts();
        if (ve_check == "constant-rank" || ve_check == "fa" || ve_check == "unique-ortho") {
            if (ve_rank < 0) throw UsageError("--rank is required for " + ve_check);
        }
        if (ve_check == "constant-rank") {
            std::optional<SampleSpec> sample;
            if (ve_sample > 0) sample = SampleSpec(ve_sample, config::seed());
            CheckResult res = constant_rank(s, ve_rank, opts, sample);
            std::cout << res.to_string() << "\n";
            return exit_code_for(res);
        }
        if (ve_check == "fa") {
            CheckResult res = fa_check(s, ve_rank, opts);
            std::cout << res.to_string() << "\n";
            return exit_code_for(res);
        }
        if (ve_check == "optimal") {
            CheckResult res = is_optimal(s, opts);
            std::cout << res.to_string() << "\n";
            return exit_code_for(res);
        }
        if (ve_check == "trivial-spectrum") {
            CheckResult res = trivial_spectrum(s.basis(), opts);
            std::cout << res.to_string() << "\n";
            return exit_code_for(res);
        }
        if (ve_check == "adapted") {
            CheckResult spec = trivial_spectrum(s.basis(), opts);
            if (!spec.ok()) {
                std::cout << "precondition failed (trivial spectrum):\n"
                          << spec.to_string() << "\n";
                return kExitViolated;
            }
            std::vector<int> adapted = adapted_vectors(s.field(), s.rows(), s.basis());
            std::cout << "adapted standard vectors (1-based):";
            for (int i : adapted) std::cout << " e" << (i + 1);
            std::cout << "\n";
            return kExitOk;
        }
        if (ve_check == "transitivity") {
            CheckResult opt = is_optimal(s, opts);
            if (!opt.ok()) {
                std::cout << "precondition failed (optimal):\n" << opt.to_string() << "\n";
                return kExitViolated;
            }
            VectorSubspace h = transitivity_exclusion(s, opts);
            std::cout << "transitivity exclusion hyperplane: " << h.to_string() << "\n";
            return kExitOk;
        }
        if (ve_check == "ortho") {
            VectorSubspace left = parse_vector_list(ve_left, s.field(), s.rows());
            VectorSubspace right = parse_vector_list(ve_right, s.field(), s.cols());
            const bool ok = ortho_check(s, left, right);
            std::cout << (ok ? "orthogonal" : "not orthogonal") << "\n";
            return ok ? kExitOk : kExitViolated;
        }
        if (ve_check == "unique-ortho") {
            OrthoPairReport rep = unique_ortho_pair(s, ve_rank, opts);
            std::cout << rep.result.to_string() << "\n";
            return exit_code_for(rep.result);
        }
        throw UsageError("unknown check '" + ve_check + "'");
    }

    if (invariants_cmd->parsed()) {
        const AffineSpace s = load_space(in_space);
        const EnumOptions opts = in_common.enum_opts();
        const int r = in_rank >= 0 ? in_rank : rank(s.base());
        if (!in_assume) {
            CheckResult cr = constant_rank(s, r, opts);
            if (!cr.ok()) {
                std::cout << "not constant rank " << r << ":\n" << cr.to_string() << "\n";
                return kExitViolated;
            }
        }
        InvariantSignature sig = st_invariants(s, r, opts);
        std::cout << sig.to_string() << "\n";
        if (!sig.class_invariant)
            std::cout << "note: (s,t) is a descriptor of the chosen normalization here, not an "
                         "equivalence invariant\n";
        return kExitOk;
    }

    if (decompose_cmd->parsed()) {
        const AffineSpace s = load_space(de_space);
        const EnumOptions opts = de_common.enum_opts();
        const int r = de_rank >= 0 ? de_rank : rank(s.base());
        Decomposition dec = decompose_max(s, r, opts);
        std::cout << "s=" << dec.s << " t=" << dec.t << "\n";
        {
            std::ofstream out(de_out + ".witness.json");
            if (!out) throw UsageError("cannot write " + de_out + ".witness.json");
            out << witness_to_json(dec.witness);
            std::cout << "witness: " << de_out << ".witness.json\n";
        }
        if (dec.m_space) {
            std::ofstream out(de_out + ".m.json");
            if (!out) throw UsageError("cannot write " + de_out + ".m.json");
            write_space(out, *dec.m_space);
            std::cout << "m_space: " << de_out << ".m.json\n";
        }
        if (dec.n_space) {
            std::ofstream out(de_out + ".n.json");
            if (!out) throw UsageError("cannot write " + de_out + ".n.json");
            write_space(out, *dec.n_space);
            std::cout << "n_space: " << de_out << ".n.json\n";
        }
        return kExitOk;
    }

    if (equiv_cmd->parsed()) {
        const AffineSpace a = load_space(eq_a);
        const AffineSpace b = load_space(eq_b);
        const EnumOptions opts = eq_common.enum_opts();
        if (a.rows() != b.rows() || a.cols() != b.cols() || a.field() != b.field() ||
            a.dim() != b.dim()) {
            std::cout << "not equivalent: shape, field, or dimension differs\n";
            return kExitViolated;
        }
        if (eq_exhaustive) {
            auto w = equiv_exhaustive(a, b, opts);
            if (w) {
                std::cout << witness_to_json(*w);
                return kExitOk;
            }
            std::cout << "not equivalent: exhaustive witness scan found nothing\n";
            return kExitViolated;
        }
        // Necessary-condition route: rank multisets, then the (s,t) signature.
        std::vector<long long> ranks_a(static_cast<std::size_t>(std::min(a.rows(), a.cols())) + 1, 0);
        auto ranks_b = ranks_a;
        a.for_each([&](long long, const Matrix& m) {
            ++ranks_a[static_cast<std::size_t>(rank(m))];
            return true;
        }, opts);
        b.for_each([&](long long, const Matrix& m) {
            ++ranks_b[static_cast<std::size_t>(rank(m))];
            return true;
        }, opts);
        if (ranks_a != ranks_b) {
            std::cout << "not equivalent: rank multisets differ\n";
            return kExitViolated;
        }
        int constant_r = -1;
        int distinct_ranks = 0;
        for (std::size_t i = 0; i < ranks_a.size(); ++i)
            if (ranks_a[i] > 0) {
                ++distinct_ranks;
                constant_r = static_cast<int>(i);
            }
        if (distinct_ranks != 1) constant_r = -1;
        if (constant_r > 0) {
            InvariantSignature sig_a = st_invariants(a, constant_r, opts);
            InvariantSignature sig_b = st_invariants(b, constant_r, opts);
            if (sig_a.class_invariant && sig_b.class_invariant && !(sig_a == sig_b)) {
                std::cout << "not equivalent: signatures differ (" << sig_a.to_string() << " vs "
                          << sig_b.to_string() << ")\n";
                return kExitViolated;
            }
        }
        std::cout << "inconclusive: all computed invariants agree (use --exhaustive to certify)\n";
        return kExitOk;
    }

    auto run_search = [](bool probe, long long q, long long k, int rows, int cols, int rk,
                         const std::string& mode, bool json, const CommonOpts& common) {
        const Field f = make_field(q, k, "");
        SearchOptions opts;
        if (mode == "exhaustive")
            opts.mode = SearchMode::exhaustive;
        else if (mode != "extension")
            throw UsageError("unknown mode '" + mode + "'");
        if (common.cap > 0) opts.cap = common.cap;
        if (common.threads > 0) opts.threads = common.threads;
        SearchReport rep = probe ? probe_small_field(f, rows, cols, rk, opts)
                                 : search_max_dim(f, rows, cols, rk, opts);
        if (json) {
            std::cout << report_to_json(rep).dump(2) << "\n";
        } else {
            std::cout << rep.to_string() << "\n";
            if (rep.example_space) std::cout << "example_space:\n" << space_to_json(*rep.example_space);
        }
        return rep.verdict == SearchVerdict::not_certified && rep.found_max_dim < 0 ? kExitResource
                                                                                    : kExitOk;
    };
    if (search_cmd->parsed())
        return run_search(false, se_q, se_k, se_rows, se_cols, se_rank, se_mode, se_json, se_common);
    if (probe_cmd->parsed())
        return run_search(true, pr_q, pr_k, pr_rows, pr_cols, pr_rank, pr_mode, pr_json, pr_common);

    return kExitUsage;
}

} // namespace

int main(int argc, char** argv) {
    try {
        return run(argc, argv);
    } catch (const UsageError& e) {
        std::cerr << "usage error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const ResourceError& e) {
        std::cerr << "resource error: " << e.what() << "\n";
        return kExitResource;
    } catch (const DomainError& e) {
        std::cerr << "domain error: " << e.what() << "\n";
        return kExitViolated;
    } catch (const InvariantViolation& e) {
        std::cerr << "invariant violation: " << e.what() << "\n";
        return kExitViolated;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    }
}
