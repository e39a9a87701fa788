#include "bcnet/matrix.hpp"

#include <sstream>
#include <utility>

namespace bcnet {

Scalar det(SMatrix m) {
    const std::size_t n = m.rows();
    if (n != m.cols()) fail("ShapeMismatch", "determinant of non-square matrix");
    Scalar d(1);
    for (std::size_t c = 0; c < n; ++c) {
        std::size_t p = c;
        while (p < n && m(p, c).is_zero()) ++p;
        if (p == n) return Scalar(0);
        if (p != c) {
            for (std::size_t j = 0; j < n; ++j) std::swap(m(p, j), m(c, j));
            d = -d;
        }
        d *= m(c, c);
        Scalar inv = m(c, c).inverse();
        for (std::size_t r = c + 1; r < n; ++r) {
            if (m(r, c).is_zero()) continue;
            Scalar f = m(r, c) * inv;
            for (std::size_t j = c; j < n; ++j) m(r, j) -= f * m(c, j);
        }
    }
    return d;
}

SMatrix inverse(const SMatrix& a) {
    const std::size_t n = a.rows();
    if (n != a.cols()) fail("ShapeMismatch", "inverse of non-square matrix");
    SMatrix m = a, inv = SMatrix::identity(n);
    for (std::size_t c = 0; c < n; ++c) {
        std::size_t p = c;
        while (p < n && m(p, c).is_zero()) ++p;
        if (p == n) fail("Singular", "matrix is singular");
        if (p != c)
            for (std::size_t j = 0; j < n; ++j) {
                std::swap(m(p, j), m(c, j));
                std::swap(inv(p, j), inv(c, j));
            }
        Scalar piv = m(c, c).inverse();
        for (std::size_t j = 0; j < n; ++j) {
            m(c, j) *= piv;
            inv(c, j) *= piv;
        }
        for (std::size_t r = 0; r < n; ++r) {
            if (r == c || m(r, c).is_zero()) continue;
            Scalar f = m(r, c);
            for (std::size_t j = 0; j < n; ++j) {
                m(r, j) -= f * m(c, j);
                inv(r, j) -= f * inv(c, j);
            }
        }
    }
    return inv;
}

std::size_t rank(SMatrix m) {
    std::size_t r = 0;
    for (std::size_t c = 0; c < m.cols() && r < m.rows(); ++c) {
        std::size_t p = r;
        while (p < m.rows() && m(p, c).is_zero()) ++p;
        if (p == m.rows()) continue;
        for (std::size_t j = 0; j < m.cols(); ++j) std::swap(m(p, j), m(r, j));
        Scalar inv = m(r, c).inverse();
        for (std::size_t i = r + 1; i < m.rows(); ++i) {
            if (m(i, c).is_zero()) continue;
            Scalar f = m(i, c) * inv;
            for (std::size_t j = c; j < m.cols(); ++j) m(i, j) -= f * m(r, j);
        }
        ++r;
    }
    return r;
}

Scalar minor(const SMatrix& m, const std::vector<int>& rows, const std::vector<int>& cols) {
    SMatrix s(rows.size(), cols.size());
    for (std::size_t i = 0; i < rows.size(); ++i)
        for (std::size_t j = 0; j < cols.size(); ++j) s(i, j) = m(rows[i], cols[j]);
    return det(std::move(s));
}

std::optional<Scalar> proportional(const SMatrix& a, const SMatrix& b) {
    if (a.rows() != b.rows() || a.cols() != b.cols()) return std::nullopt;
    std::optional<Scalar> c;
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j) {
            if (b(i, j).is_zero()) {
                if (!a(i, j).is_zero()) return std::nullopt;
                continue;
            }
            Scalar q = a(i, j) / b(i, j);
            if (!c) c = q;
            else if (*c != q) return std::nullopt;
        }
    if (!c || c->is_zero()) return std::nullopt;
    return c;
}

SMatrix evaluate(const EMatrix& m, const Env& env) {
    std::vector<Expr> roots;
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j) roots.push_back(m(i, j));
    Tape t(roots);
    auto v = t.values(t.bind(env));
    SMatrix out(m.rows(), m.cols());
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j) out(i, j) = v[i * m.cols() + j];
    return out;
}

SMatrix to_scalar(const EMatrix& m) { return evaluate(m, {}); }

EMatrix to_expr(const SMatrix& m) {
    EMatrix out(m.rows(), m.cols());
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j) out(i, j) = Expr(m(i, j));
    return out;
}

std::string to_string(const SMatrix& m) {
    std::ostringstream os;
    for (std::size_t i = 0; i < m.rows(); ++i) {
        os << "[";
        for (std::size_t j = 0; j < m.cols(); ++j) os << (j ? ", " : "") << m(i, j);
        os << "]\n";
    }
    return os.str();
}

} // namespace bcnet
