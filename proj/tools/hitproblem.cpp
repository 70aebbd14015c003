// Command-line front end. Results go to stdout, progress to stderr.
// Exit codes: 0 success, 1 verification failure, 2 invalid input, 3 capacity.

#include "hitproblem.hpp"
#include "hitproblem/verify.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <memory>
#include <optional>

using namespace hitproblem;
using nlohmann::json;

namespace {

enum Exit
{
    kOk = 0,
    kVerifyFailed = 1,
    kBadInput = 2,
    kCapacity = 3,
};

struct RunConfig
{
    int k = 5;
    unsigned n = 0;
    unsigned m = 0;
    int d = 0;
    std::string omega;
    std::string format = "text";
    std::string method = "auto";
    std::string block_method = "upset";
    std::string singer = "auto";
    unsigned jobs = 1;
    std::uint64_t max_columns = 200'000;
    std::string checkpoint_dir;
    std::string input;
    std::string pair;
    std::string suite = "all";
    int d_max = 5;
    bool plus = false;
    bool zero = false;
    bool quiet = false;
};

std::string default_checkpoint_dir()
{
    const char* env = std::getenv("HITPROBLEM_CHECKPOINT_DIR");
    return env ? env : "";
}

void progress(const RunConfig& cfg, const std::string& line)
{
    if (!cfg.quiet)
        std::cerr << line << '\n';
}

BlockOptions block_options(const RunConfig& cfg)
{
    BlockOptions o;
    if (cfg.block_method == "projection")
        o.method = BlockMethod::projection;
    else if (cfg.block_method == "upset")
        o.method = BlockMethod::upset;
    else
        throw OutOfRange("block method must be upset or projection");
    if (cfg.singer == "never")
        o.singer = SingerPolicy::never;
    else if (cfg.singer == "always")
        o.singer = SingerPolicy::always;
    else if (cfg.singer == "auto")
        o.singer = SingerPolicy::when_large;
    else
        throw OutOfRange("singer policy must be never, always or auto");
    o.max_columns = std::max<std::uint64_t>(cfg.max_columns, 2'000'000);
    return o;
}

FiltrationOptions filtration_options(const RunConfig& cfg)
{
    FiltrationOptions o;
    o.block = block_options(cfg);
    o.jobs = cfg.jobs;
    o.on_block = [&cfg](const BlockSummary& s) {
        progress(cfg, "block " + s.omega.to_string() + ": size " + std::to_string(s.block_size) + ", dim " +
                          std::to_string(s.dim) + " (" + to_string(s.method) + ")");
    };
    return o;
}

BasisOptions basis_options(const RunConfig& cfg)
{
    BasisOptions o;
    o.max_columns = cfg.max_columns;
    o.jobs = cfg.jobs;
    return o;
}

std::shared_ptr<const AdmissibleBasis> monolithic(const RunConfig& cfg)
{
    BasisCache cache(basis_options(cfg), cfg.checkpoint_dir);
    return cache.get(cfg.k, cfg.n);
}

bool use_monolithic(const RunConfig& cfg)
{
    if (cfg.method == "monolithic")
        return true;
    if (cfg.method == "filtration")
        return false;
    if (cfg.method != "auto")
        throw OutOfRange("method must be auto, monolithic or filtration");
    return monomial_count(cfg.k, cfg.n) <= cfg.max_columns;
}

Polynomial read_input(const RunConfig& cfg)
{
    std::optional<Polynomial> f;
    if (cfg.input.empty() || cfg.input == "-")
        f = read_polynomial(std::cin);
    else {
        std::ifstream in(cfg.input);
        if (!in)
            throw ParseError("cannot open " + cfg.input);
        f = read_polynomial(in);
    }
    if (!f)
        throw ParseError("no polynomial in input");
    return *f;
}

void print_monomials(const RunConfig& cfg, const std::vector<Monomial>& ms, const json& extra = {})
{
    if (cfg.format == "json") {
        json j = extra.is_null() ? json::object() : extra;
        j["dim"] = ms.size();
        j["admissibles"] = monomials_json(ms);
        std::cout << j.dump(1) << '\n';
    }
    else
        write_monomials(std::cout, ms);
}

int cmd_dim(const RunConfig& cfg)
{
    std::size_t dim = 0;
    std::string method;
    if (wood_filter(cfg.k, cfg.n) && cfg.method == "auto") {
        method = "wood";
    }
    else if (use_monolithic(cfg)) {
        dim = monolithic(cfg)->dimension();
        method = "monolithic";
    }
    else {
        dim = dim_by_filtration(cfg.k, cfg.n, filtration_options(cfg));
        method = "filtration";
    }
    if (cfg.format == "json")
        std::cout << json{{"k", cfg.k}, {"n", cfg.n}, {"dim", dim}, {"method", method}}.dump() << '\n';
    else
        std::cout << dim << '\n';
    return kOk;
}

int cmd_basis(const RunConfig& cfg)
{
    std::vector<Monomial> adm;
    if (!cfg.omega.empty()) {
        auto omega = WeightVector::parse(cfg.omega);
        if (omega.degree() != cfg.n)
            throw DegreeMismatch("weight " + omega.to_string() + " has degree " + std::to_string(omega.degree()));
        BlockOptions bo = block_options(cfg);
        bo.singer = SingerPolicy::never;
        adm = compute_block(cfg.k, omega, bo).admissibles();
    }
    else if (use_monolithic(cfg))
        adm = monolithic(cfg)->admissibles();
    else {
        auto fo = filtration_options(cfg);
        for (const auto& w : enumerate_weights(cfg.k, cfg.n)) {
            auto block = compute_block(cfg.k, w, fo.block);
            if (block.method == BlockMethod::singer)
                continue;
            auto part = block.admissibles();
            adm.insert(adm.end(), part.begin(), part.end());
        }
        sort_descending(adm);
    }
    if (cfg.plus || cfg.zero) {
        std::vector<Monomial> kept;
        for (const auto& m : adm)
            if (m.all_positive() ? cfg.plus : cfg.zero)
                kept.push_back(m);
        adm = std::move(kept);
    }
    json extra = {{"k", cfg.k}, {"n", cfg.n}};
    if (!cfg.omega.empty())
        extra["omega"] = cfg.omega;
    print_monomials(cfg, adm, extra);
    return kOk;
}

int cmd_filtration(const RunConfig& cfg)
{
    auto res = filtration(cfg.k, cfg.n, filtration_options(cfg));
    if (cfg.format == "json") {
        json blocks = json::array();
        for (const auto& b : res.blocks)
            blocks.push_back({{"omega", b.omega.to_string()},
                              {"block_size", b.block_size},
                              {"rank", b.rank},
                              {"dim", b.dim},
                              {"method", to_string(b.method)}});
        std::cout << json{{"k", cfg.k}, {"n", cfg.n}, {"dim", res.total()}, {"blocks", blocks}}.dump(1) << '\n';
        return kOk;
    }
    std::cout << "omega,block_size,rank,dim\n";
    for (const auto& b : res.blocks)
        std::cout << '"' << b.omega.to_string() << "\"," << b.block_size << ',' << b.rank << ',' << b.dim << '\n';
    return kOk;
}

int cmd_normal_form(const RunConfig& cfg)
{
    Polynomial f = read_input(cfg);
    RunConfig c = cfg;
    c.k = f.vars();
    if (!f.is_zero())
        c.n = f.leading().degree();
    auto basis = monolithic(c);
    Polynomial nf = normal_form_poly(*basis, f);
    if (cfg.format == "json")
        std::cout << json{{"hit", nf.is_zero()}, {"normal_form", polynomial_json(nf)}}.dump() << '\n';
    else {
        write_polynomial(std::cout, nf);
        if (nf.is_zero())
            std::cout << "0\n";
    }
    return kOk;
}

int cmd_kameko(const RunConfig& cfg)
{
    BasisCache cache(basis_options(cfg), cfg.checkpoint_dir);
    auto r = kameko_iso_check(cfg.k, cfg.m, &cache);
    auto chain = reduce_degree(cfg.k, r.source_degree);
    json steps = json::array();
    for (const auto& s : chain.steps)
        steps.push_back({{"s", s.s}, {"d", s.d}, {"m", s.m}});
    json j = {{"k", r.k},
              {"m", r.m},
              {"source_degree", r.source_degree},
              {"criterion_met", r.criterion_met},
              {"source_dim", r.source_dim},
              {"target_dim", r.target_dim},
              {"induced_rank", r.induced_rank},
              {"representative_independent", r.representative_independent},
              {"representatives_checked", r.representatives_checked},
              {"isomorphism", r.isomorphism},
              {"reductions", steps},
              {"wood", chain.wood}};
    std::cout << j.dump(1) << '\n';
    return kOk;
}

int cmd_reduce(const RunConfig& cfg)
{
    auto chain = reduce_degree(cfg.k, cfg.n);
    if (cfg.format == "json") {
        json steps = json::array();
        for (const auto& s : chain.steps)
            steps.push_back({{"s", s.s}, {"d", s.d}, {"m", s.m}});
        std::cout << json{{"k", cfg.k}, {"n", cfg.n}, {"wood", chain.wood}, {"reductions", steps}}.dump() << '\n';
        return kOk;
    }
    if (chain.wood)
        std::cout << "mu(" << cfg.n << ") > " << cfg.k << ": (QP_k)_n = 0\n";
    for (const auto& s : chain.steps)
        std::cout << cfg.n << " = " << s.s << "(2^" << s.d << "-1) + 2^" << s.d << "*" << s.m << '\n';
    return kOk;
}

int cmd_phi(const RunConfig& cfg)
{
    auto pair = IndexPair::parse(cfg.pair);
    Polynomial f = read_input(cfg);
    std::vector<Monomial> out;
    for (const auto& x : f)
        if (auto y = phi(pair, x))
            out.push_back(*y);
    Polynomial g(f.vars() + 1, std::move(out));
    if (cfg.format == "json")
        std::cout << polynomial_json(g).dump() << '\n';
    else
        write_polynomial(std::cout, g);
    return kOk;
}

int cmd_p(const RunConfig& cfg)
{
    auto pair = IndexPair::parse(cfg.pair);
    Polynomial g = p_map(pair, read_input(cfg));
    if (cfg.format == "json")
        std::cout << polynomial_json(g).dump() << '\n';
    else
        write_polynomial(std::cout, g);
    return kOk;
}

int cmd_phi_sets(const RunConfig& cfg)
{
    RunConfig c = cfg;
    c.k = cfg.k - 1;
    auto basis = monolithic(c);
    auto sets = phi_sets(basis->admissibles(), cfg.k);
    if (cfg.format == "json") {
        std::cout << json{{"k", cfg.k},
                          {"n", cfg.n},
                          {"phi0", monomials_json(sets.zero)},
                          {"phi_plus", monomials_json(sets.plus)},
                          {"phi", monomials_json(sets.all)}}
                         .dump(1)
                  << '\n';
        return kOk;
    }
    std::cout << "# Phi^0: " << sets.zero.size() << '\n';
    write_monomials(std::cout, sets.zero);
    std::cout << "\n# Phi^+: " << sets.plus.size() << '\n';
    write_monomials(std::cout, sets.plus);
    std::cout << "\n# Phi: " << sets.all.size() << '\n';
    return kOk;
}

int cmd_verify(const RunConfig& cfg)
{
    verify::Options o;
    o.d_max = cfg.d_max;
    o.jobs = cfg.jobs;
    o.filtration.block = block_options(cfg);
    o.log = [&cfg](const std::string& s) { progress(cfg, s); };
    verify::Runner runner(o);
    auto results = runner.run_suite(cfg.suite);
    bool ok = true;
    for (const auto& r : results) {
        std::cout << (r.pass ? "PASS " : "FAIL ") << r.id << " " << r.title << ": " << r.detail << '\n';
        ok = ok && r.pass;
    }
    return ok ? kOk : kVerifyFailed;
}

// B_5^+(bar omega_(5,d)) for comparison against published lists.
int cmd_export(const RunConfig& cfg)
{
    if (cfg.d < 1)
        throw OutOfRange("export needs --d >= 1");
    BlockOptions bo = block_options(cfg);
    bo.singer = SingerPolicy::never;
    auto bar = WeightVector::bar(5, cfg.d);
    std::vector<Monomial> plus;
    for (const auto& m : compute_block(5, bar, bo).admissibles())
        if (m.all_positive())
            plus.push_back(m);
    print_monomials(cfg, plus, json{{"k", 5}, {"d", cfg.d}, {"omega", bar.to_string()}});
    return kOk;
}

void add_common(CLI::App* sub, RunConfig& cfg)
{
    sub->add_option("--format", cfg.format, "text, json or csv")->check(CLI::IsMember({"text", "json", "csv"}));
    sub->add_option("--jobs", cfg.jobs, "worker threads")->check(CLI::Range(1u, 256u));
    sub->add_option("--max-columns", cfg.max_columns, "largest slice for the monolithic engine")
        ->check(CLI::Range(std::uint64_t(1), std::uint64_t(50'000'000)));
    sub->add_option("--checkpoint-dir", cfg.checkpoint_dir, "echelon checkpoints (default $HITPROBLEM_CHECKPOINT_DIR)");
    sub->add_option("--block-method", cfg.block_method, "upset (exact) or projection (upper bound)");
    sub->add_option("--singer", cfg.singer, "never, always or auto");
    sub->add_flag("--quiet", cfg.quiet, "no progress on stderr");
}

void add_kn(CLI::App* sub, RunConfig& cfg)
{
    sub->add_option("--k", cfg.k, "number of variables")->check(CLI::Range(1, kMaxVars));
    sub->add_option("--n", cfg.n, "degree")->required();
}

}  // namespace

int main(int argc, char** argv)
{
    CLI::App app{"Minimal generators of F2[x1..xk] over the Steenrod algebra"};
    app.require_subcommand(1);
    RunConfig cfg;
    cfg.checkpoint_dir = default_checkpoint_dir();

    auto* dim = app.add_subcommand("dim", "dim (QP_k)_n");
    add_kn(dim, cfg);
    add_common(dim, cfg);
    dim->add_option("--method", cfg.method, "auto, monolithic or filtration");

    auto* basis = app.add_subcommand("basis", "admissible monomials B_k(n)");
    add_kn(basis, cfg);
    add_common(basis, cfg);
    basis->add_option("--method", cfg.method, "auto, monolithic or filtration");
    basis->add_option("--omega", cfg.omega, "restrict to one weight, e.g. 4,2,1");
    auto* plus = basis->add_flag("--plus", cfg.plus, "only monomials with all exponents positive");
    basis->add_flag("--zero", cfg.zero, "only monomials with a zero exponent")->excludes(plus);

    auto* filt = app.add_subcommand("filtration", "per-weight block dimensions (CSV)");
    add_kn(filt, cfg);
    add_common(filt, cfg);

    auto* nf = app.add_subcommand("normal-form", "reduce a polynomial modulo hit elements");
    add_common(nf, cfg);
    nf->add_option("--input", cfg.input, "polynomial file, one monomial per line ('-' for stdin)");

    auto* kam = app.add_subcommand("kameko", "Kameko isomorphism report (JSON)");
    kam->add_option("--k", cfg.k, "number of variables")->check(CLI::Range(1, kMaxVars));
    kam->add_option("--m", cfg.m, "target degree")->required();
    add_common(kam, cfg);

    auto* red = app.add_subcommand("reduce", "decompositions n = s(2^d-1) + 2^d m");
    add_kn(red, cfg);
    add_common(red, cfg);

    auto* morph = app.add_subcommand("morphism", "phi, p and Phi-sets");
    morph->require_subcommand(1);
    auto* mphi = morph->add_subcommand("phi", "apply phi_(i;I) to each monomial of the input");
    mphi->add_option("--pair", cfg.pair, "e.g. \"1;(2,3)\"")->required();
    mphi->add_option("--input", cfg.input, "polynomial file ('-' for stdin)");
    add_common(mphi, cfg);
    auto* mp = morph->add_subcommand("p", "apply p_(i;I) to the input");
    mp->add_option("--pair", cfg.pair, "e.g. \"1;(2,3)\"")->required();
    mp->add_option("--input", cfg.input, "polynomial file ('-' for stdin)");
    add_common(mp, cfg);
    auto* msets = morph->add_subcommand("phi-sets", "Phi^0, Phi^+, Phi of B_{k-1}(n)");
    msets->add_option("--k", cfg.k, "target number of variables")->check(CLI::Range(2, kMaxVars));
    msets->add_option("--n", cfg.n, "degree")->required();
    add_common(msets, cfg);

    auto* ver = app.add_subcommand("verify", "acceptance checks");
    ver->add_option("--suite", cfg.suite, "main, filtration, properties or all")
        ->check(CLI::IsMember({"main", "filtration", "properties", "all"}));
    ver->add_option("--d-max", cfg.d_max, "largest d for degrees 4(2^d-1)")->check(CLI::Range(1, 5));
    add_common(ver, cfg);

    auto* exp = app.add_subcommand("export", "B_5^+ at weight bar omega_(5,d)");
    exp->add_option("--d", cfg.d, "d >= 1")->required();
    add_common(exp, cfg);

    try {
        app.parse(argc, argv);
    }
    catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? kOk : kBadInput;
    }

    try {
        if (*dim)
            return cmd_dim(cfg);
        if (*basis)
            return cmd_basis(cfg);
        if (*filt)
            return cmd_filtration(cfg);
        if (*nf)
            return cmd_normal_form(cfg);
        if (*kam)
            return cmd_kameko(cfg);
        if (*red)
            return cmd_reduce(cfg);
        if (*mphi)
            return cmd_phi(cfg);
        if (*mp)
            return cmd_p(cfg);
        if (*msets)
            return cmd_phi_sets(cfg);
        if (*ver)
            return cmd_verify(cfg);
        if (*exp)
            return cmd_export(cfg);
    }
    catch (const CapacityError& e) {
        std::cerr << "capacity: " << e.what() << '\n';
        return kCapacity;
    }
    catch (const InvariantViolation& e) {
        std::cerr << "internal error: " << e.what() << '\n';
        return kVerifyFailed;
    }
    catch (const Error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kBadInput;
    }
    catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kBadInput;
    }
    return kOk;
}
