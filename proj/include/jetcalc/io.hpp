#ifndef JETCALC_IO_HPP
#define JETCALC_IO_HPP

#include <iosfwd>
#include <string>
#include <vector>

#include "jetcalc/arcmap.hpp"
#include "jetcalc/motivic.hpp"

namespace jetcalc {

// Ideal file: "vars: x y z", optional "params: a b", then "gen: <poly>"
// lines; '#' starts a comment. With params the ideal lives over vars+params.
struct IdealFile {
    std::vector<std::string> vars;
    std::vector<std::string> params;
    Ideal ideal;
};
IdealFile read_ideal(std::istream& in);
IdealFile read_ideal_file(const std::string& path);
std::string write_ideal(const std::vector<std::string>& vars,
                        const std::vector<std::string>& params,
                        const std::vector<MPoly>& gens);

// Jet/arc file: optional "params: a b", "cap: K", then one line per
// component with K whitespace-separated coefficient tokens (rationals, or
// polynomials in the params).
struct JetFile {
    std::vector<std::string> params;
    Arc arc;
};
JetFile read_jet(std::istream& in);
JetFile read_jet_file(const std::string& path);
std::string write_jet(const Arc& arc);

// Map file: "source: u v", "target: x y", then one "comp: <poly>" per
// target coordinate (polynomials in the source variables).
PolyMap read_map(std::istream& in);
PolyMap read_map_file(const std::string& path);

// Matrix file: each non-comment line is a matrix row of whitespace-separated
// polynomials in t; rectangular. Entries are truncated at the given cap.
SeriesMatrix read_series_matrix(std::istream& in, int cap);
SeriesMatrix read_series_matrix_file(const std::string& path, int cap);

// Divisor file: "d: 2", per divisor "div: E1 nu=1 lambda=0 [nutilde=..
// lambdatilde=..]", beta-table lines "beta {}: u^2-1", "beta {E1,E2}: ...".
DivisorData read_divisor(std::istream& in);
DivisorData read_divisor_file(const std::string& path);

} // namespace jetcalc

#endif
