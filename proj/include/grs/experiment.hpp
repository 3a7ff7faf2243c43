#ifndef GRS_EXPERIMENT_HPP
#define GRS_EXPERIMENT_HPP

#include "grs/average.hpp"
#include "grs/signal.hpp"
#include "grs/univariate.hpp"

#include <functional>
#include <iosfwd>
#include <span>
#include <string>
#include <tuple>
#include <vector>

namespace grs {

/// Static description of one benchmark table sweep.
struct TableSpec {
    enum class Family { Univariate, Derivative, Bivariate, AverageSampling };

    int id = 0;
    Family family = Family::Univariate;
    std::vector<double> delta;       // band limit(s)
    int n_begin = 0;
    int n_end = 0;
    int n_step = 2;
    int grid_denominator = 0;        // evaluation grid is {j/denominator}
    std::vector<std::string> columns;
};

TableSpec table_spec(int id);

struct TableRow {
    int n;
    std::vector<double> cols;
};

struct TableResult {
    int id = 0;
    std::vector<double> delta;
    std::vector<std::string> columns;   // names of cols, excluding leading n
    std::vector<TableRow> rows;
    std::vector<std::string> notes;     // emitted metadata
};

/// Pointwise |reconstructor - reference| on the grid, plus the maximum.
ErrorReport error_grid(const std::function<double(double)>& reconstructor,
                       const std::function<double(double)>& reference,
                       std::span<const double> grid,
                       ReconMethod method = ReconMethod::GaussRegularized,
                       double bound = 0.0);

/// Runs one full benchmark sweep (ids 1..10).
TableResult run_table(int id);

enum class EmitFormat { Csv, Json };

void emit(const TableResult& table, EmitFormat format, const std::string& path);
void emit_csv(const TableResult& table, std::ostream& out);
void emit_json(const TableResult& table, std::ostream& out);

/// Per-n (n, log10 bound, log10 gauss-method error) pairs backing the
/// log-error convergence plots; defined for tables 1..9.
std::vector<std::tuple<int, double, double>> figure_rows(const TableResult& table);

/// The five-atom measure driving the average-sampling benchmark:
/// atoms at 0 (weight 2/3) and +-1/16, +-1/8 (weight 1/12 each), sigma = 1/4.
AveragingMeasure five_atom_measure();

} // namespace grs

#endif
