#ifndef GRS_CSV_HPP
#define GRS_CSV_HPP

#include "grs/multivariate.hpp"
#include "grs/univariate.hpp"

#include <string>

namespace grs {

/// Reads `j,value` rows. The indices must form exactly (-n, n] for some
/// n >= 2; missing or duplicate indices are errors.
SampleWindow1D load_samples_1d(const std::string& path);
void save_samples_1d(const SampleWindow1D& window, const std::string& path);

/// Reads `j1,j2,value` rows covering the full lattice (-n, n]^2.
SampleWindowND load_samples_2d(const std::string& path);
void save_samples_2d(const SampleWindowND& window, const std::string& path);

} // namespace grs

#endif
