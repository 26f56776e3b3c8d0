#ifndef QRM_BAREISS_HPP
#define QRM_BAREISS_HPP

// Fraction-free Gaussian elimination over Z and over R_D.

#include "qrm/quadfield.hpp"

#include <gmp.h>
#include <gmpxx.h>

#include <cstddef>
#include <utility>
#include <vector>

namespace qrm {

/// Square integer matrix, row-major.
class IntMatrix {
public:
    explicit IntMatrix(std::size_t n) : n_(n), a_(n * n) {}

    std::size_t size() const noexcept { return n_; }
    mpz_class& at(std::size_t r, std::size_t c) { return a_[r * n_ + c]; }
    const mpz_class& at(std::size_t r, std::size_t c) const { return a_[r * n_ + c]; }

    void swap_rows(std::size_t r1, std::size_t r2)
    {
        for (std::size_t c = 0; c < n_; ++c) {
            std::swap(at(r1, c), at(r2, c));
        }
    }

private:
    std::size_t n_;
    std::vector<mpz_class> a_;
};

/// Square matrix over R_D, stored as separate coordinate planes.
class QuadMatrix {
public:
    QuadMatrix(std::size_t n, Discriminant d) : n_(n), d_(d), x_(n * n), y_(n * n) {}

    std::size_t size() const noexcept { return n_; }
    Discriminant disc() const noexcept { return d_; }

    void set(std::size_t r, std::size_t c, const QuadInt& v)
    {
        x_[r * n_ + c] = v.x();
        y_[r * n_ + c] = v.y();
    }

    QuadInt get(std::size_t r, std::size_t c) const { return QuadInt(x_[r * n_ + c], y_[r * n_ + c], d_); }

    mpz_class& x(std::size_t r, std::size_t c) { return x_[r * n_ + c]; }
    mpz_class& y(std::size_t r, std::size_t c) { return y_[r * n_ + c]; }

    bool is_zero(std::size_t r, std::size_t c) const
    {
        return sgn(x_[r * n_ + c]) == 0 && sgn(y_[r * n_ + c]) == 0;
    }

    void swap_rows(std::size_t r1, std::size_t r2)
    {
        for (std::size_t c = 0; c < n_; ++c) {
            std::swap(x(r1, c), x(r2, c));
            std::swap(y(r1, c), y(r2, c));
        }
    }

private:
    std::size_t n_;
    Discriminant d_;
    std::vector<mpz_class> x_;
    std::vector<mpz_class> y_;
};

inline mpz_class bareiss_determinant(IntMatrix m)
{
    const std::size_t n = m.size();
    if (n == 0) {
        return 1;
    }
    bool negate = false;
    mpz_class prev = 1;
    mpz_class t;
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (sgn(m.at(k, k)) == 0) {
            std::size_t r = k + 1;
            while (r < n && sgn(m.at(r, k)) == 0) {
                ++r;
            }
            if (r == n) {
                return 0;
            }
            m.swap_rows(k, r);
            negate = !negate;
        }
        const mpz_class& p = m.at(k, k);
        const bool unit_step = (p == prev);
        for (std::size_t i = k + 1; i < n; ++i) {
            const mpz_class& b = m.at(i, k);
            const bool b_zero = sgn(b) == 0;
            if (b_zero && unit_step) {
                continue;
            }
            for (std::size_t j = k + 1; j < n; ++j) {
                mpz_class& a = m.at(i, j);
                const mpz_class& c = m.at(k, j);
                mpz_mul(t.get_mpz_t(), p.get_mpz_t(), a.get_mpz_t());
                if (!b_zero && sgn(c) != 0) {
                    mpz_submul(t.get_mpz_t(), b.get_mpz_t(), c.get_mpz_t());
                }
                mpz_divexact(a.get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
            }
        }
        prev = p;
    }
    mpz_class det = m.at(n - 1, n - 1);
    return negate ? mpz_class(-det) : det;
}

namespace detail {

/// Scratch space for products in R_D, avoiding reallocation inside the kernel.
class QuadScratch {
public:
    explicit QuadScratch(Discriminant d) : k_(d.norm_coeff()), half_(d.kind() == AlphaKind::Half)
    {
        mpz_inits(t1_, t2_, t3_, s1_, s2_, nullptr);
    }
    ~QuadScratch() { mpz_clears(t1_, t2_, t3_, s1_, s2_, nullptr); }
    QuadScratch(const QuadScratch&) = delete;
    QuadScratch& operator=(const QuadScratch&) = delete;

    /// (ox, oy) = (ax + ay alpha)(bx + by alpha); outputs must not alias inputs.
    void mul(mpz_t ox, mpz_t oy, const mpz_t ax, const mpz_t ay, const mpz_t bx, const mpz_t by)
    {
        if (mpz_sgn(ay) == 0) {
            mpz_mul(ox, ax, bx);
            mpz_mul(oy, ax, by);
            return;
        }
        if (mpz_sgn(by) == 0) {
            mpz_mul(ox, ax, bx);
            mpz_mul(oy, ay, bx);
            return;
        }
        mpz_mul(t1_, ax, bx);
        mpz_mul(t2_, ay, by);
        mpz_add(s1_, ax, ay);
        mpz_add(s2_, bx, by);
        mpz_mul(t3_, s1_, s2_);
        mpz_sub(oy, t3_, t1_);
        if (!half_) {
            mpz_sub(oy, oy, t2_);
        }
        mpz_set(ox, t1_);
        if (k_ == 1) {
            mpz_sub(ox, ox, t2_);
        } else {
            mpz_submul_ui(ox, t2_, static_cast<unsigned long>(k_));
        }
    }

private:
    std::int64_t k_;
    bool half_;
    mpz_t t1_, t2_, t3_, s1_, s2_;
};

} // namespace detail

inline QuadInt bareiss_determinant(QuadMatrix m)
{
    const std::size_t n = m.size();
    const Discriminant d = m.disc();
    if (n == 0) {
        return QuadInt(1);
    }
    detail::QuadScratch scratch(d);
    bool negate = false;
    mpz_class prev_x = 1, prev_y = 0;
    mpz_class conj_x, conj_y, prev_norm = 1;
    mpz_class ux, uy, vx, vy, wx, wy;
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (m.is_zero(k, k)) {
            std::size_t r = k + 1;
            while (r < n && m.is_zero(r, k)) {
                ++r;
            }
            if (r == n) {
                return QuadInt(0);
            }
            m.swap_rows(k, r);
            negate = !negate;
        }
        const mpz_class px = m.x(k, k);
        const mpz_class py = m.y(k, k);
        const bool prev_rational = sgn(prev_y) == 0;
        const bool unit_step = (px == prev_x && py == prev_y);
        for (std::size_t i = k + 1; i < n; ++i) {
            const mpz_class bx = m.x(i, k);
            const mpz_class by = m.y(i, k);
            const bool b_zero = sgn(bx) == 0 && sgn(by) == 0;
            if (b_zero && unit_step) {
                continue;
            }
            for (std::size_t j = k + 1; j < n; ++j) {
                mpz_class& ax = m.x(i, j);
                mpz_class& ay = m.y(i, j);
                const mpz_class& cx = m.x(k, j);
                const mpz_class& cy = m.y(k, j);
                scratch.mul(ux.get_mpz_t(), uy.get_mpz_t(), px.get_mpz_t(), py.get_mpz_t(), ax.get_mpz_t(),
                            ay.get_mpz_t());
                if (!b_zero && (sgn(cx) != 0 || sgn(cy) != 0)) {
                    scratch.mul(vx.get_mpz_t(), vy.get_mpz_t(), bx.get_mpz_t(), by.get_mpz_t(), cx.get_mpz_t(),
                                cy.get_mpz_t());
                    mpz_sub(ux.get_mpz_t(), ux.get_mpz_t(), vx.get_mpz_t());
                    mpz_sub(uy.get_mpz_t(), uy.get_mpz_t(), vy.get_mpz_t());
                }
                if (prev_rational) {
                    mpz_divexact(ax.get_mpz_t(), ux.get_mpz_t(), prev_x.get_mpz_t());
                    mpz_divexact(ay.get_mpz_t(), uy.get_mpz_t(), prev_x.get_mpz_t());
                } else {
                    scratch.mul(wx.get_mpz_t(), wy.get_mpz_t(), ux.get_mpz_t(), uy.get_mpz_t(), conj_x.get_mpz_t(),
                                conj_y.get_mpz_t());
                    mpz_divexact(ax.get_mpz_t(), wx.get_mpz_t(), prev_norm.get_mpz_t());
                    mpz_divexact(ay.get_mpz_t(), wy.get_mpz_t(), prev_norm.get_mpz_t());
                }
            }
        }
        prev_x = px;
        prev_y = py;
        const QuadInt pv(px, py, d);
        const QuadInt pc = pv.conj();
        conj_x = pc.x();
        conj_y = pc.y();
        prev_norm = norm(pv);
    }
    QuadInt det = m.get(n - 1, n - 1);
    return negate ? -det : det;
}

} // namespace qrm

#endif // QRM_BAREISS_HPP
