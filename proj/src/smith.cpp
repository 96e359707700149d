#include "wtcalc/smith.hpp"

namespace wtcalc {

namespace {

Int abs_int(const Int& x) { return x < 0 ? Int(-x) : x; }

// Smallest nonzero |entry| in m[k.., k..]; ties broken by (row, col).
bool find_pivot(const IntMatrix& m, std::size_t k, std::size_t& pr, std::size_t& pc) {
    bool found = false;
    Int best;
    for (std::size_t i = k; i < m.rows(); ++i)
        for (std::size_t j = k; j < m.cols(); ++j) {
            const Int& x = m.at(i, j);
            if (x == 0) continue;
            Int ax = abs_int(x);
            if (!found || ax < best) {
                found = true;
                best = ax;
                pr = i;
                pc = j;
            }
        }
    return found;
}

}  // namespace

SmithResult smith_normal_form(const IntMatrix& m) {
    SmithResult r{IntMatrix::identity(m.rows()), m, IntMatrix::identity(m.cols()), 0};
    IntMatrix& s = r.s;
    std::size_t n = std::min(m.rows(), m.cols());

    for (std::size_t k = 0; k < n; ++k) {
        std::size_t pr = k, pc = k;
        if (!find_pivot(s, k, pr, pc)) break;
        s.swap_rows(k, pr);
        r.u.swap_rows(k, pr);
        s.swap_cols(k, pc);
        r.v.swap_cols(k, pc);

        for (;;) {
            // Clear column k below the pivot.
            bool dirty = false;
            for (std::size_t i = k + 1; i < s.rows(); ++i) {
                if (s.at(i, k) == 0) continue;
                Int q = s.at(i, k) / s.at(k, k);
                s.addmul_row(i, k, -q);
                r.u.addmul_row(i, k, -q);
                if (s.at(i, k) != 0) {
                    // Remainder is smaller than the pivot; promote it.
                    s.swap_rows(k, i);
                    r.u.swap_rows(k, i);
                    dirty = true;
                }
            }
            if (dirty) continue;

            for (std::size_t j = k + 1; j < s.cols(); ++j) {
                if (s.at(k, j) == 0) continue;
                Int q = s.at(k, j) / s.at(k, k);
                s.addmul_col(j, k, -q);
                r.v.addmul_col(j, k, -q);
                if (s.at(k, j) != 0) {
                    s.swap_cols(k, j);
                    r.v.swap_cols(k, j);
                    dirty = true;
                }
            }
            if (dirty) continue;

            // Row k and column k are clear outside the pivot. Enforce that the
            // pivot divides everything in the trailing block; if not, fold the
            // offending row into row k and restart the clearing loop.
            bool fixed = true;
            for (std::size_t i = k + 1; fixed && i < s.rows(); ++i)
                for (std::size_t j = k + 1; j < s.cols(); ++j) {
                    if (s.at(i, j) % s.at(k, k) != 0) {
                        s.addmul_row(k, i, Int(1));
                        r.u.addmul_row(k, i, Int(1));
                        fixed = false;
                        break;
                    }
                }
            if (fixed) break;
        }

        if (s.at(k, k) < 0) {
            s.negate_row(k);
            r.u.negate_row(k);
        }
        ++r.rank;
    }
    return r;
}

IntMatrix hermite_rows(const IntMatrix& m) {
    IntMatrix w = m;
    std::size_t pivot_row = 0;
    std::vector<std::size_t> pivot_cols;

    for (std::size_t col = 0; col < w.cols() && pivot_row < w.rows(); ++col) {
        // Euclid down the column until at most one nonzero entry remains at
        // or below pivot_row.
        for (;;) {
            std::size_t best = w.rows();
            Int best_abs;
            for (std::size_t i = pivot_row; i < w.rows(); ++i) {
                if (w.at(i, col) == 0) continue;
                Int ax = abs_int(w.at(i, col));
                if (best == w.rows() || ax < best_abs) {
                    best = i;
                    best_abs = ax;
                }
            }
            if (best == w.rows()) break;  // column clear
            w.swap_rows(pivot_row, best);
            bool others = false;
            for (std::size_t i = pivot_row + 1; i < w.rows(); ++i) {
                if (w.at(i, col) == 0) continue;
                Int q = w.at(i, col) / w.at(pivot_row, col);
                w.addmul_row(i, pivot_row, -q);
                if (w.at(i, col) != 0) others = true;
            }
            if (!others) break;
        }
        if (w.at(pivot_row, col) == 0) continue;
        if (w.at(pivot_row, col) < 0) w.negate_row(pivot_row);
        // Reduce entries above the pivot into [0, pivot).
        for (std::size_t i = 0; i < pivot_row; ++i) {
            Int q = w.at(i, col) / w.at(pivot_row, col);
            if (w.at(i, col) - q * w.at(pivot_row, col) < 0) q -= 1;
            if (q != 0) w.addmul_row(i, pivot_row, -q);
        }
        pivot_cols.push_back(col);
        ++pivot_row;
    }

    IntMatrix out(pivot_row, w.cols());
    for (std::size_t i = 0; i < pivot_row; ++i)
        for (std::size_t j = 0; j < w.cols(); ++j) out.at(i, j) = w.at(i, j);
    return out;
}

std::optional<std::vector<Int>> solve_in_rowspace(const std::vector<Int>& target,
                                                  const IntMatrix& basis) {
    if (target.size() != basis.cols()) throw validation_error("solve_in_rowspace: length mismatch");
    std::vector<Int> rem = target;
    std::vector<Int> coeff(basis.rows());
    for (std::size_t i = 0; i < basis.rows(); ++i) {
        // Locate row i's pivot column.
        std::size_t p = 0;
        while (p < basis.cols() && basis.at(i, p) == 0) ++p;
        if (p == basis.cols()) continue;
        if (rem[p] % basis.at(i, p) != 0) {
            // Pivot columns are strictly increasing, so nothing later can fix this.
            return std::nullopt;
        }
        Int q = rem[p] / basis.at(i, p);
        coeff[i] = q;
        if (q != 0)
            for (std::size_t j = p; j < basis.cols(); ++j) rem[j] -= q * basis.at(i, j);
    }
    for (const Int& x : rem)
        if (x != 0) return std::nullopt;
    return coeff;
}

std::optional<std::vector<Int>> express_in_rows(const std::vector<Int>& target,
                                                const IntMatrix& m) {
    if (target.size() != m.cols()) throw validation_error("express_in_rows: length mismatch");
    SmithResult r = smith_normal_form(m);
    // x * m == target iff (x * u^-1) * s == target * v
    std::vector<Int> t = row_times_matrix(target, r.v);
    std::vector<Int> y(m.rows());
    for (std::size_t i = 0; i < m.cols(); ++i) {
        if (i < r.rank) {
            if (t[i] % r.s.at(i, i) != 0) return std::nullopt;
            y[i] = t[i] / r.s.at(i, i);
        } else if (t[i] != 0) {
            return std::nullopt;
        }
    }
    return row_times_matrix(y, r.u);
}

IntMatrix left_kernel_rows(const IntMatrix& m) {
    SmithResult r = smith_normal_form(m);
    std::size_t n_out = m.rows() - r.rank;
    IntMatrix out(n_out, m.rows());
    for (std::size_t i = 0; i < n_out; ++i)
        for (std::size_t j = 0; j < m.rows(); ++j) out.at(i, j) = r.u.at(r.rank + i, j);
    return out;
}

}  // namespace wtcalc
