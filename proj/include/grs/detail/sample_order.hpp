#ifndef GRS_DETAIL_SAMPLE_ORDER_HPP
#define GRS_DETAIL_SAMPLE_ORDER_HPP

namespace grs::detail {

/// Visits every integer j in (-n, n] in increasing |t - j| order, t in (0,1).
/// Ties (t = 0.5) resolve to the lower index; the order is deterministic.
template <class Body>
void for_each_sample_by_distance(int n, double t, Body&& body)
{
    int lo = 0;
    int hi = 1;
    for (int emitted = 0; emitted < 2 * n; ++emitted) {
        const bool lo_left = lo > -n;          // lo still in (-n, n]
        const bool hi_left = hi <= n;
        if (lo_left && (!hi_left || t - lo <= hi - t)) {
            body(lo--);
        } else if (hi_left) {
            body(hi++);
        }
    }
}

} // namespace grs::detail

#endif
