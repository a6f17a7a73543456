#include "jetcalc/cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <ostream>
#include <sstream>

#include "jetcalc/io.hpp"
#include "jetcalc/jets.hpp"

namespace jetcalc {

namespace {

using ordered_json = nlohmann::ordered_json;

struct CliState {
    std::string format = "text";
    int cap = 16;
    bool cap_given = false;
    GroebnerOptions gopts;
    std::ostream* out = nullptr;

    bool json() const { return format == "json"; }
    void emit_text(const std::string& s) { *out << s; }
    void emit_json(const ordered_json& j) { *out << j.dump(2) << "\n"; }
};

std::string join_longs(const std::vector<long>& xs) {
    std::ostringstream os;
    for (std::size_t i = 0; i < xs.size(); ++i) {
        if (i) os << " ";
        os << xs[i];
    }
    return os.str();
}

std::string join_rats(const std::vector<Rational>& xs) {
    std::ostringstream os;
    for (std::size_t i = 0; i < xs.size(); ++i) {
        if (i) os << " ";
        os << rat_to_string(xs[i]);
    }
    return os.str();
}

std::string join_names(const std::vector<std::string>& xs) {
    std::ostringstream os;
    for (std::size_t i = 0; i < xs.size(); ++i) {
        if (i) os << " ";
        os << xs[i];
    }
    return os.str();
}

ordered_json rats_json(const std::vector<Rational>& xs) {
    ordered_json a = ordered_json::array();
    for (const auto& x : xs) a.push_back(rat_to_string(x));
    return a;
}

// The ambient ideal loaders reject parameterized ideals where the operation
// is about a concrete variety.
Ideal ambient_ideal(const IdealFile& file, const std::string& op) {
    if (!file.params.empty())
        throw precondition_error(op + " does not accept an ideal with params");
    return file.ideal;
}

Arc arc_for_ring(const JetFile& jet, std::size_t expected, const std::string& what) {
    if (jet.arc.size() != expected)
        throw precondition_error(what + " has " + std::to_string(jet.arc.size()) +
                                 " components, expected " + std::to_string(expected));
    return jet.arc;
}

void cmd_jet_ideal(CliState& st, const std::string& file, int level) {
    IdealFile in = read_ideal_file(file);
    JetIdeal ji = jet_ideal(ambient_ideal(in, "jet-ideal"), level, st.gopts);
    if (st.json()) {
        ordered_json j;
        j["level"] = std::to_string(level);
        j["vars"] = ji.jet_ring->vars();
        ordered_json gens = ordered_json::array();
        for (const auto& g : ji.equations.gens()) gens.push_back(g.to_string());
        j["gens"] = gens;
        st.emit_json(j);
        return;
    }
    std::ostringstream os;
    os << "level: " << level << "\n";
    os << "vars: " << join_names(ji.jet_ring->vars()) << "\n";
    for (const auto& g : ji.equations.gens()) os << "gen: " << g.to_string() << "\n";
    st.emit_text(os.str());
}

void cmd_dim(CliState& st, const std::string& file, int level) {
    IdealFile in = read_ideal_file(file);
    long dim = jet_dim(ambient_ideal(in, "dim"), level, st.gopts);
    if (st.json()) {
        ordered_json j;
        j["level"] = std::to_string(level);
        j["dim"] = std::to_string(dim);
        st.emit_json(j);
        return;
    }
    std::ostringstream os;
    os << "level: " << level << "\n";
    os << "dim: " << dim << "\n";
    st.emit_text(os.str());
}

void cmd_fiber(CliState& st, const std::string& jet_path, const std::string& ideal_path) {
    IdealFile in = read_ideal_file(ideal_path);
    Ideal ideal = ambient_ideal(in, "fiber");
    JetFile jf = read_jet_file(jet_path);
    AffineFiber fiber = fiber_next_level(arc_for_ring(jf, ideal.ring()->size(), "jet"), ideal);
    if (st.json()) {
        ordered_json j;
        j["feasible"] = fiber.feasible;
        if (fiber.feasible) {
            j["dim"] = std::to_string(fiber.dim());
            j["basepoint"] = rats_json(fiber.basepoint);
        }
        ordered_json dirs = ordered_json::array();
        for (const auto& d : fiber.directions) dirs.push_back(rats_json(d));
        j["directions"] = dirs;
        st.emit_json(j);
        return;
    }
    std::ostringstream os;
    os << "feasible: " << (fiber.feasible ? "true" : "false") << "\n";
    if (fiber.feasible) {
        os << "dim: " << fiber.dim() << "\n";
        os << "basepoint: " << join_rats(fiber.basepoint) << "\n";
    }
    for (const auto& d : fiber.directions) os << "direction: " << join_rats(d) << "\n";
    st.emit_text(os.str());
}

void cmd_obstruct(CliState& st, const std::string& jet_path, const std::string& ideal_path,
                  int extra) {
    IdealFile in = read_ideal_file(ideal_path);
    Ideal ideal = ambient_ideal(in, "obstruct");
    JetFile jf = read_jet_file(jet_path);
    ObstructionSystem sys =
        obstruction_system(arc_for_ring(jf, ideal.ring()->size(), "jet"), ideal, extra);
    if (st.json()) {
        ordered_json j;
        j["level"] = std::to_string(sys.level);
        j["extra"] = std::to_string(sys.extra);
        j["unknowns"] = sys.unknowns;
        ordered_json conds = ordered_json::array();
        for (const auto& [order, poly] : sys.conditions) {
            ordered_json c;
            c["order"] = std::to_string(order);
            c["poly"] = poly.to_string();
            conds.push_back(c);
        }
        j["conditions"] = conds;
        st.emit_json(j);
        return;
    }
    std::ostringstream os;
    os << "level: " << sys.level << "\n";
    os << "extra: " << sys.extra << "\n";
    os << "unknowns: " << join_names(sys.unknowns) << "\n";
    for (const auto& [order, poly] : sys.conditions)
        os << "condition " << order << ": " << poly.to_string() << "\n";
    st.emit_text(os.str());
}

void cmd_sing_ideal(CliState& st, const std::string& file, int dim) {
    IdealFile in = read_ideal_file(file);
    Ideal h = h_ideal(ambient_ideal(in, "sing-ideal"), dim, st.gopts);
    std::vector<std::string> gens;
    if (auto gb = h.cached_basis()) {
        for (const auto& g : gb->polys) gens.push_back(g.to_string());
    } else {
        for (const auto& g : h.gens()) gens.push_back(g.to_string());
    }
    const std::string note = "H restricted to (N-d)-subsets of the supplied generators";
    if (st.json()) {
        ordered_json j;
        j["vars"] = in.vars;
        j["note"] = note;
        j["gens"] = gens;
        st.emit_json(j);
        return;
    }
    std::ostringstream os;
    os << "vars: " << join_names(in.vars) << "\n";
    os << "note: " << note << "\n";
    for (const auto& g : gens) os << "gen: " << g << "\n";
    st.emit_text(os.str());
}

void cmd_h_order(CliState& st, const std::string& arc_path, const std::string& ideal_path) {
    IdealFile in = read_ideal_file(ideal_path);
    Ideal h = ambient_ideal(in, "h-order");
    JetFile jf = read_jet_file(arc_path);
    OrderVal o = h_order(arc_for_ring(jf, h.ring()->size(), "arc"), h);
    if (st.json()) {
        ordered_json j;
        j["order"] = o.to_string();
        j["certified"] = o.certified;
        st.emit_json(j);
        return;
    }
    st.emit_text("order: " + o.to_string() + "\n");
}

void cmd_ord(CliState& st, const std::string& arc_path, const std::string& map_path,
             const std::string& ideal_path) {
    JetFile jf = read_jet_file(arc_path);
    if (map_path.empty() && ideal_path.empty())
        throw precondition_error("ord needs --map and/or --ideal");
    ordered_json j;
    std::ostringstream os;
    if (!map_path.empty()) {
        PolyMap sigma = read_map_file(map_path);
        Arc gamma = arc_for_ring(jf, sigma.source_dim(), "arc");
        if (ideal_path.empty()) {
            OrderVal e = ord_jacobian(sigma, gamma);
            j["e"] = e.to_string();
            os << "e: " << e.to_string() << "\n";
        } else {
            IdealFile in = read_ideal_file(ideal_path);
            DeltaClass dc = delta_class(sigma, gamma, ambient_ideal(in, "ord"));
            j["e"] = dc.e.to_string();
            j["eprime"] = dc.eprime.to_string();
            os << "e: " << dc.e.to_string() << "\n";
            os << "eprime: " << dc.eprime.to_string() << "\n";
        }
    } else {
        IdealFile in = read_ideal_file(ideal_path);
        Ideal ideal = ambient_ideal(in, "ord");
        OrderVal o = ord_series_ideal(arc_for_ring(jf, ideal.ring()->size(), "arc"), ideal);
        j["order"] = o.to_string();
        os << "order: " << o.to_string() << "\n";
    }
    if (st.json())
        st.emit_json(j);
    else
        st.emit_text(os.str());
}

void cmd_smith(CliState& st, const std::string& matrix_path) {
    SeriesMatrix m = read_series_matrix_file(matrix_path, st.cap);
    SmithResult r = t_smith_invariants(m);
    if (!r.certified)
        throw resource_error("cap " + std::to_string(st.cap) +
                             " too small to certify the Smith invariants; raise --cap");
    if (st.json()) {
        ordered_json j;
        ordered_json inv = ordered_json::array();
        for (long e : r.invariants) inv.push_back(std::to_string(e));
        j["invariants"] = inv;
        j["sum"] = std::to_string(r.sum());
        st.emit_json(j);
        return;
    }
    std::ostringstream os;
    os << "invariants: " << join_longs(r.invariants) << "\n";
    os << "sum: " << r.sum() << "\n";
    st.emit_text(os.str());
}

void cmd_lift(CliState& st, const std::string& map_path, const std::string& target_path,
              const std::string& seed_path, int level, const std::string& ideal_path) {
    PolyMap sigma = read_map_file(map_path);
    Arc target = arc_for_ring(read_jet_file(target_path), sigma.target_dim(), "target arc");
    Arc seed = arc_for_ring(read_jet_file(seed_path), sigma.source_dim(), "seed arc");
    if (st.cap_given) {
        if (seed.cap() < st.cap || target.cap() < st.cap)
            throw precondition_error("arc caps are smaller than the requested --cap");
        seed = seed.truncated(st.cap);
        target = target.truncated(st.cap);
    } else if (seed.cap() != target.cap()) {
        throw precondition_error("seed and target caps differ; pass --cap to truncate");
    }
    std::optional<Ideal> ideal;
    if (!ideal_path.empty()) ideal = ambient_ideal(read_ideal_file(ideal_path), "lift");
    LiftResult r = hensel_lift(sigma, seed, target, level, ideal);
    if (st.json()) {
        ordered_json j;
        j["feasible"] = r.feasible;
        j["e"] = std::to_string(r.e);
        if (r.feasible) {
            ordered_json eta;
            eta["cap"] = std::to_string(r.eta->cap());
            ordered_json comps = ordered_json::array();
            for (std::size_t i = 0; i < r.eta->size(); ++i)
                comps.push_back(rats_json(r.eta->comp(i).rational_coeffs()));
            eta["components"] = comps;
            j["eta"] = eta;
        } else {
            j["reason"] = r.reason;
        }
        st.emit_json(j);
        return;
    }
    std::ostringstream os;
    os << "feasible: " << (r.feasible ? "true" : "false") << "\n";
    os << "e: " << r.e << "\n";
    if (r.feasible)
        os << write_jet(*r.eta);
    else
        os << "reason: " << r.reason << "\n";
    st.emit_text(os.str());
}

MapSel parse_map_sel(const std::string& s) {
    if (s == "sigma") return MapSel::sigma;
    if (s == "sigmatilde") return MapSel::sigma_tilde;
    throw precondition_error("--map must be sigma or sigmatilde");
}

std::string format_multiindex(const DivisorData& data, const MultiIndex& j) {
    std::ostringstream os;
    os << "{";
    bool first = true;
    for (std::size_t i = 0; i < data.count(); ++i) {
        if (j.j[i] == 0) continue;
        if (!first) os << ",";
        os << data.divisors()[i].name << "=" << j.j[i];
        first = false;
    }
    os << "}";
    return os.str();
}

MultiIndex parse_multiindex(const DivisorData& data, const std::string& src) {
    MultiIndex j;
    j.j.assign(data.count(), 0);
    std::string body = src;
    if (!body.empty() && body.front() == '{') {
        if (body.back() != '}') throw parse_error("unbalanced braces in multi-index");
        body = body.substr(1, body.size() - 2);
    }
    std::string cur;
    for (char ch : body + ",") {
        if (ch != ',') {
            cur += ch;
            continue;
        }
        std::string item;
        for (char c2 : cur)
            if (c2 != ' ' && c2 != '\t') item += c2;
        cur.clear();
        if (item.empty()) continue;
        auto eq = item.find('=');
        if (eq == std::string::npos)
            throw parse_error("multi-index entry '" + item + "' needs name=value");
        int idx = data.index_of(item.substr(0, eq));
        if (idx < 0) throw parse_error("unknown divisor '" + item.substr(0, eq) + "'");
        try {
            j.j[idx] = std::stol(item.substr(eq + 1));
        } catch (...) {
            throw parse_error("bad multi-index value in '" + item + "'");
        }
        if (j.j[idx] < 0) throw parse_error("multi-index entries must be nonnegative");
    }
    return j;
}

void cmd_strata(CliState& st, const std::string& div_path, long level, const std::string& which) {
    DivisorData data = read_divisor_file(div_path);
    MapSel sel = parse_map_sel(which);
    auto an = enumerate_An(data, level, sel);
    VPoly total;
    ordered_json rows = ordered_json::array();
    std::ostringstream os;
    os << "level: " << level << "\n";
    os << "map: " << which << "\n";
    for (const auto& j : an) {
        VPoly beta = beta_stratum(data, j, level, sel);
        long dim = dim_stratum(data, j, level, sel);
        total = total + beta;
        if (st.json()) {
            ordered_json row;
            row["j"] = format_multiindex(data, j);
            row["s"] = std::to_string(j.s());
            row["e"] = std::to_string(e_of(data, j, sel));
            row["eprime"] = std::to_string(eprime_of(data, j, sel));
            row["dim"] = std::to_string(dim);
            row["beta"] = beta.to_string();
            rows.push_back(row);
        } else {
            os << "stratum " << format_multiindex(data, j) << ": s=" << j.s()
               << " e=" << e_of(data, j, sel) << " eprime=" << eprime_of(data, j, sel)
               << " dim=" << dim << " beta: " << beta.to_string() << "\n";
        }
    }
    if (st.json()) {
        ordered_json j;
        j["level"] = std::to_string(level);
        j["map"] = which;
        j["strata"] = rows;
        j["total"] = total.to_string();
        st.emit_json(j);
        return;
    }
    os << "total: " << total.to_string() << "\n";
    st.emit_text(os.str());
}

void cmd_beta(CliState& st, const std::string& div_path, long level, const std::string& j_src,
              const std::string& which) {
    DivisorData data = read_divisor_file(div_path);
    MapSel sel = parse_map_sel(which);
    MultiIndex j = parse_multiindex(data, j_src);
    if (2 * e_of(data, j, sel) > level || eprime_of(data, j, sel) > level)
        throw precondition_error("multi-index lies outside A_n at this level");
    VPoly beta = beta_stratum(data, j, level, sel);
    long dim = dim_stratum(data, j, level, sel);
    if (st.json()) {
        ordered_json out;
        out["j"] = format_multiindex(data, j);
        out["dim"] = std::to_string(dim);
        out["beta"] = beta.to_string();
        st.emit_json(out);
        return;
    }
    std::ostringstream os;
    os << "j: " << format_multiindex(data, j) << "\n";
    os << "dim: " << dim << "\n";
    os << "beta: " << beta.to_string() << "\n";
    st.emit_text(os.str());
}

void cmd_compare_nu(CliState& st, const std::string& div_path, long n_max) {
    DivisorData data = read_divisor_file(div_path);
    CompareReport report = compare_multiplicities(data, n_max);
    if (st.json()) {
        ordered_json j;
        ordered_json rows = ordered_json::array();
        for (const auto& row : report.rows) {
            ordered_json r;
            r["n"] = std::to_string(row.n);
            ordered_json ks = ordered_json::array();
            for (long k : row.K) ks.push_back(std::to_string(k));
            r["K"] = ks;
            if (row.k) r["k"] = std::to_string(*row.k);
            if (row.deg_q) r["degQ"] = std::to_string(*row.deg_q);
            r["rhs_bound"] = rat_to_string(row.rhs_bound);
            r["stabilized"] = row.stabilized;
            r["forced"] = row.forced;
            rows.push_back(r);
        }
        j["rows"] = rows;
        j["verdict"] = report.verdict;
        st.emit_json(j);
        return;
    }
    std::ostringstream os;
    for (const auto& row : report.rows) {
        os << "n=" << row.n << ": K={" << join_longs(row.K) << "}";
        if (row.k) os << " k=" << *row.k;
        if (row.deg_q) os << " degQ=" << *row.deg_q;
        os << " rhs<" << rat_to_string(row.rhs_bound);
        if (row.stabilized) os << " stable";
        if (row.forced) os << " FORCED";
        os << "\n";
    }
    os << "verdict: " << report.verdict << "\n";
    st.emit_text(os.str());
}

} // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"exact jet-space, arc-order and motivic-stratum calculator"};
    app.name("jetcalc");

    CliState st;
    st.out = &out;
    app.add_option("--format", st.format, "output format")
        ->check(CLI::IsMember({"text", "json"}))
        ->envname("JETCALC_FORMAT");
    auto* cap_opt = app.add_option("--cap", st.cap, "working truncation level")->check(CLI::PositiveNumber);
    app.add_option("--max-degree", st.gopts.max_total_degree, "Groebner total-degree cap");
    app.add_option("--max-basis", st.gopts.max_basis, "Groebner basis-size cap");
    app.require_subcommand(1);

    std::string file, jet_path, arc_path, map_path, ideal_path, target_path, seed_path;
    std::string div_path, j_src, which = "sigma";
    int level = 0, extra = 1, dim_arg = 0;
    long n_max = 40;

    auto* c_jet = app.add_subcommand("jet-ideal", "coefficient equations of the n-jet space");
    c_jet->add_option("--level", level, "jet level n")->required();
    c_jet->add_option("file", file, "ideal file")->required();

    auto* c_dim = app.add_subcommand("dim", "Krull dimension of the n-jet ideal");
    c_dim->add_option("--level", level, "jet level n")->required();
    c_dim->add_option("file", file, "ideal file")->required();

    auto* c_fiber = app.add_subcommand("fiber", "next-level fiber over an n-jet");
    c_fiber->add_option("--jet", jet_path, "jet file")->required();
    c_fiber->add_option("file", file, "ideal file")->required();

    auto* c_obs = app.add_subcommand("obstruct", "lifting obstruction system for a jet");
    c_obs->add_option("--jet", jet_path, "jet file")->required();
    c_obs->add_option("--extra", extra, "number of unknown levels")->required();
    c_obs->add_option("file", file, "ideal file")->required();

    auto* c_sing = app.add_subcommand("sing-ideal", "ideal H cutting out the singular locus");
    c_sing->add_option("--dim", dim_arg, "dimension d of the variety")->required();
    c_sing->add_option("file", file, "ideal file")->required();

    auto* c_hord = app.add_subcommand("h-order", "order of an arc along the ideal H");
    c_hord->add_option("--arc", arc_path, "arc file")->required();
    c_hord->add_option("file", file, "H ideal file")->required();

    auto* c_ord = app.add_subcommand("ord", "Jacobian / ideal orders along an arc");
    c_ord->add_option("--arc", arc_path, "arc file")->required();
    c_ord->add_option("--map", map_path, "map file");
    c_ord->add_option("--ideal", ideal_path, "ideal file");

    auto* c_smith = app.add_subcommand("smith", "t-adic Smith invariants of a series matrix");
    c_smith->add_option("--matrix", file, "matrix file")->required();

    auto* c_lift = app.add_subcommand("lift", "Hensel-lift a target arc through a map");
    c_lift->add_option("--map", map_path, "map file")->required();
    c_lift->add_option("--target", target_path, "target arc file")->required();
    c_lift->add_option("--seed", seed_path, "seed arc file")->required();
    c_lift->add_option("--level", level, "agreement level n")->required();
    c_lift->add_option("--ideal", ideal_path, "target ideal file");

    auto* c_strata = app.add_subcommand("strata", "stratum census A_n with dims and beta");
    c_strata->add_option("--level", n_max, "level n")->required();
    c_strata->add_option("--map", which, "sigma or sigmatilde");
    c_strata->add_option("file", div_path, "divisor file")->required();

    auto* c_beta = app.add_subcommand("beta", "beta of a single stratum");
    c_beta->add_option("--level", n_max, "level n")->required();
    c_beta->add_option("--j", j_src, "multi-index, e.g. \"E1=1,E2=0\"")->required();
    c_beta->add_option("--map", which, "sigma or sigmatilde");
    c_beta->add_option("file", div_path, "divisor file")->required();

    auto* c_cmp = app.add_subcommand("compare-nu", "multiplicity comparison degree bookkeeping");
    c_cmp->add_option("--nmax", n_max, "largest level to inspect");
    c_cmp->add_option("file", div_path, "divisor file")->required();

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
        st.cap_given = cap_opt->count() > 0;

        if (*c_jet) cmd_jet_ideal(st, file, level);
        else if (*c_dim) cmd_dim(st, file, level);
        else if (*c_fiber) cmd_fiber(st, jet_path, file);
        else if (*c_obs) cmd_obstruct(st, jet_path, file, extra);
        else if (*c_sing) cmd_sing_ideal(st, file, dim_arg);
        else if (*c_hord) cmd_h_order(st, arc_path, file);
        else if (*c_ord) cmd_ord(st, arc_path, map_path, ideal_path);
        else if (*c_smith) cmd_smith(st, file);
        else if (*c_lift) cmd_lift(st, map_path, target_path, seed_path, level, ideal_path);
        else if (*c_strata) cmd_strata(st, div_path, n_max, which);
        else if (*c_beta) cmd_beta(st, div_path, n_max, j_src, which);
        else if (*c_cmp) cmd_compare_nu(st, div_path, n_max);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) {
            // --help and friends print to stdout and succeed
            out << app.help();
            return 0;
        }
        err << "error: " << e.what() << "\n";
        return 1;
    } catch (const resource_error& e) {
        err << "resource error: " << e.what() << "\n";
        return 2;
    } catch (const parse_error& e) {
        err << "input error: " << e.what() << "\n";
        return 1;
    } catch (const precondition_error& e) {
        err << "usage error: " << e.what() << "\n";
        return 1;
    } catch (const error& e) {
        err << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}

} // namespace jetcalc
