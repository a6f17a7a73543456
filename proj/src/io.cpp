#include "jetcalc/io.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>
#include <utility>

namespace jetcalc {

namespace {

std::string strip(const std::string& s) {
    std::size_t a = s.find_first_not_of(" \t\r\n");
    if (a == std::string::npos) return "";
    std::size_t b = s.find_last_not_of(" \t\r\n");
    return s.substr(a, b - a + 1);
}

std::vector<std::string> split_ws(const std::string& s) {
    std::vector<std::string> out;
    std::istringstream is(s);
    std::string tok;
    while (is >> tok) out.push_back(tok);
    return out;
}

// Lines with comments removed and blank lines dropped.
std::vector<std::string> payload_lines(std::istream& in) {
    std::vector<std::string> out;
    std::string line;
    while (std::getline(in, line)) {
        auto hash = line.find('#');
        if (hash != std::string::npos) line = line.substr(0, hash);
        line = strip(line);
        if (!line.empty()) out.push_back(line);
    }
    return out;
}

bool header(const std::string& line, const std::string& key, std::string& value) {
    if (line.rfind(key + ":", 0) != 0) return false;
    value = strip(line.substr(key.size() + 1));
    return true;
}

std::ifstream open_or_throw(const std::string& path) {
    std::ifstream f(path);
    if (!f) throw parse_error("cannot open '" + path + "'");
    return f;
}

} // namespace

IdealFile read_ideal(std::istream& in) {
    IdealFile out;
    std::vector<std::string> gen_sources;
    for (const auto& line : payload_lines(in)) {
        std::string value;
        if (header(line, "vars", value)) {
            out.vars = split_ws(value);
        } else if (header(line, "params", value)) {
            out.params = split_ws(value);
        } else if (header(line, "gen", value)) {
            gen_sources.push_back(value);
        } else {
            throw parse_error("ideal file: unrecognized line '" + line + "'");
        }
    }
    if (out.vars.empty()) throw parse_error("ideal file: missing 'vars:' header");
    std::vector<std::string> all = out.vars;
    all.insert(all.end(), out.params.begin(), out.params.end());
    RingPtr ring = make_ring(all);
    std::vector<MPoly> gens;
    for (const auto& src : gen_sources) gens.push_back(parse_poly(src, ring));
    out.ideal = Ideal(ring, std::move(gens));
    return out;
}

IdealFile read_ideal_file(const std::string& path) {
    auto f = open_or_throw(path);
    return read_ideal(f);
}

std::string write_ideal(const std::vector<std::string>& vars,
                        const std::vector<std::string>& params,
                        const std::vector<MPoly>& gens) {
    std::ostringstream os;
    os << "vars:";
    for (const auto& v : vars) os << " " << v;
    os << "\n";
    if (!params.empty()) {
        os << "params:";
        for (const auto& p : params) os << " " << p;
        os << "\n";
    }
    for (const auto& g : gens) os << "gen: " << g.to_string() << "\n";
    return os.str();
}

JetFile read_jet(std::istream& in) {
    JetFile out;
    int cap = -1;
    std::vector<std::vector<std::string>> rows;
    for (const auto& line : payload_lines(in)) {
        std::string value;
        if (header(line, "params", value)) {
            out.params = split_ws(value);
        } else if (header(line, "cap", value)) {
            try {
                cap = std::stoi(value);
            } catch (...) {
                throw parse_error("jet file: bad cap '" + value + "'");
            }
        } else {
            rows.push_back(split_ws(line));
        }
    }
    if (cap <= 0) throw parse_error("jet file: missing or non-positive 'cap:' header");
    if (rows.empty()) throw parse_error("jet file: no components");
    RingPtr ring = make_ring(out.params);
    std::vector<TruncSeries> comps;
    for (const auto& row : rows) {
        if (static_cast<int>(row.size()) != cap)
            throw parse_error("jet file: component has " + std::to_string(row.size()) +
                              " coefficients, expected cap = " + std::to_string(cap));
        std::vector<MPoly> coeffs;
        for (const auto& tok : row) coeffs.push_back(parse_poly(tok, ring));
        comps.push_back(TruncSeries::from_polys(ring, cap, std::move(coeffs)));
    }
    out.arc = Arc(std::move(comps));
    return out;
}

JetFile read_jet_file(const std::string& path) {
    auto f = open_or_throw(path);
    return read_jet(f);
}

std::string write_jet(const Arc& arc) {
    std::ostringstream os;
    const auto& params = arc.coeff_ring()->vars();
    if (!params.empty()) {
        os << "params:";
        for (const auto& p : params) os << " " << p;
        os << "\n";
    }
    os << "cap: " << arc.cap() << "\n";
    for (std::size_t i = 0; i < arc.size(); ++i) {
        for (int k = 0; k < arc.cap(); ++k) {
            if (k > 0) os << " ";
            const MPoly& c = arc.comp(i).coeff(k);
            if (c.is_constant()) {
                os << rat_to_string(c.constant_value());
            } else {
                // keep each coefficient a single whitespace-free token
                std::string s = c.to_string();
                s.erase(std::remove(s.begin(), s.end(), ' '), s.end());
                os << s;
            }
        }
        os << "\n";
    }
    return os.str();
}

PolyMap read_map(std::istream& in) {
    std::vector<std::string> source, target;
    std::vector<std::string> comp_sources;
    for (const auto& line : payload_lines(in)) {
        std::string value;
        if (header(line, "source", value)) {
            source = split_ws(value);
        } else if (header(line, "target", value)) {
            target = split_ws(value);
        } else if (header(line, "comp", value)) {
            comp_sources.push_back(value);
        } else {
            throw parse_error("map file: unrecognized line '" + line + "'");
        }
    }
    if (source.empty()) throw parse_error("map file: missing 'source:' header");
    if (target.empty()) throw parse_error("map file: missing 'target:' header");
    if (comp_sources.size() != target.size())
        throw parse_error("map file: need one 'comp:' per target coordinate");
    RingPtr src_ring = make_ring(source);
    RingPtr tgt_ring = make_ring(target);
    std::vector<MPoly> comps;
    for (const auto& s : comp_sources) comps.push_back(parse_poly(s, src_ring));
    return PolyMap(src_ring, tgt_ring, std::move(comps));
}

PolyMap read_map_file(const std::string& path) {
    auto f = open_or_throw(path);
    return read_map(f);
}

SeriesMatrix read_series_matrix(std::istream& in, int cap) {
    if (cap <= 0) throw precondition_error("matrix cap must be positive");
    static const RingPtr t_ring = make_ring({"t"});
    static const RingPtr empty_ring = make_ring({});
    std::vector<std::vector<TruncSeries>> rows;
    for (const auto& line : payload_lines(in)) {
        std::vector<TruncSeries> row;
        for (const auto& tok : split_ws(line)) {
            MPoly p = parse_poly(tok, t_ring);
            std::vector<Rational> coeffs(cap, Rational(0));
            for (const auto& term : p.terms()) {
                if (term.exp[0] < static_cast<std::uint32_t>(cap))
                    coeffs[term.exp[0]] = term.coeff;
            }
            row.push_back(TruncSeries::from_rationals(empty_ring, cap, coeffs));
        }
        rows.push_back(std::move(row));
    }
    if (rows.empty()) throw parse_error("matrix file: no rows");
    return SeriesMatrix::from_rows(std::move(rows));
}

SeriesMatrix read_series_matrix_file(const std::string& path, int cap) {
    auto f = open_or_throw(path);
    return read_series_matrix(f, cap);
}

namespace {

long parse_long(const std::string& s, const std::string& what) {
    try {
        std::size_t used = 0;
        long v = std::stol(s, &used);
        if (used != s.size()) throw parse_error("bad " + what + ": '" + s + "'");
        return v;
    } catch (const parse_error&) {
        throw;
    } catch (...) {
        throw parse_error("bad " + what + ": '" + s + "'");
    }
}

} // namespace

DivisorData read_divisor(std::istream& in) {
    long d = -1;
    std::vector<Divisor> divisors;
    std::vector<std::pair<std::vector<std::string>, VPoly>> beta_raw;
    for (const auto& line : payload_lines(in)) {
        std::string value;
        if (header(line, "d", value)) {
            d = parse_long(value, "ambient dimension");
        } else if (header(line, "div", value)) {
            auto toks = split_ws(value);
            if (toks.empty()) throw parse_error("divisor line without a name");
            Divisor dv;
            dv.name = toks[0];
            bool saw_nu = false;
            for (std::size_t i = 1; i < toks.size(); ++i) {
                auto eq = toks[i].find('=');
                if (eq == std::string::npos)
                    throw parse_error("divisor attribute '" + toks[i] + "' needs key=value");
                std::string key = toks[i].substr(0, eq);
                long v = parse_long(toks[i].substr(eq + 1), "divisor attribute");
                if (key == "nu") {
                    dv.nu = v;
                    saw_nu = true;
                } else if (key == "lambda") {
                    dv.lambda = v;
                } else if (key == "nutilde") {
                    dv.nu_tilde = v;
                } else if (key == "lambdatilde") {
                    dv.lambda_tilde = v;
                } else {
                    throw parse_error("unknown divisor attribute '" + key + "'");
                }
            }
            if (!saw_nu) throw parse_error("divisor '" + dv.name + "' needs nu=");
            divisors.push_back(std::move(dv));
        } else if (line.rfind("beta", 0) == 0) {
            auto open = line.find('{');
            auto close = line.find('}');
            auto colon = line.find(':', close == std::string::npos ? 0 : close);
            if (open == std::string::npos || close == std::string::npos ||
                colon == std::string::npos || close < open)
                throw parse_error("beta line needs the form 'beta {E1,E2}: <poly in u>'");
            std::string inside = line.substr(open + 1, close - open - 1);
            std::vector<std::string> names;
            std::string cur;
            for (char ch : inside + ",") {
                if (ch == ',') {
                    cur = strip(cur);
                    if (!cur.empty()) names.push_back(cur);
                    cur.clear();
                } else {
                    cur += ch;
                }
            }
            beta_raw.emplace_back(std::move(names), parse_vpoly(strip(line.substr(colon + 1))));
        } else {
            throw parse_error("divisor file: unrecognized line '" + line + "'");
        }
    }
    if (d < 1) throw parse_error("divisor file: missing 'd:' header");

    auto index_of = [&](const std::string& name) -> std::size_t {
        for (std::size_t i = 0; i < divisors.size(); ++i)
            if (divisors[i].name == name) return i;
        throw parse_error("beta line mentions unknown divisor '" + name + "'");
    };
    std::map<DivSubset, VPoly> beta_table;
    for (auto& [names, beta] : beta_raw) {
        DivSubset subset;
        for (const auto& n : names) subset.push_back(index_of(n));
        std::sort(subset.begin(), subset.end());
        subset.erase(std::unique(subset.begin(), subset.end()), subset.end());
        if (!beta_table.emplace(std::move(subset), std::move(beta)).second)
            throw parse_error("duplicate beta entry");
    }
    return DivisorData(d, std::move(divisors), std::move(beta_table));
}

DivisorData read_divisor_file(const std::string& path) {
    auto f = open_or_throw(path);
    return read_divisor(f);
}

} // namespace jetcalc
