/*
   Copyright 2026 The skewmrd Authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#include "skewmrd/linalg.hpp"

#include <type_traits>

#include "skewmrd/simd/fp_rowops.hpp"

namespace skewmrd {

template <class B>
Matrix<B>::Matrix(const Field<B>& F, int rows, int cols)
    : F_(&F), rows_(rows), cols_(cols), data_(static_cast<std::size_t>(rows) * cols, F.zero()) {}

template <class B>
Matrix<B> Matrix<B>::identity(const Field<B>& F, int n) {
    Matrix M(F, n, n);
    for (int i = 0; i < n; ++i) M(i, i) = F.one();
    return M;
}

template <class B>
Matrix<B> Matrix<B>::operator*(const Matrix& o) const {
    require(cols_ == o.rows_, ErrorKind::ShapeMismatch, "matrix product shape mismatch");
    Matrix R(*F_, rows_, o.cols_);
    for (int i = 0; i < rows_; ++i)
        for (int k = 0; k < cols_; ++k) {
            const auto& a = (*this)(i, k);
            if (F_->is_zero(a)) continue;
            for (int j = 0; j < o.cols_; ++j) F_->add_into(R(i, j), F_->mul(a, o(k, j)));
        }
    return R;
}

template <class B>
Matrix<B> Matrix<B>::operator+(const Matrix& o) const {
    require(rows_ == o.rows_ && cols_ == o.cols_, ErrorKind::ShapeMismatch, "matrix sum shape mismatch");
    Matrix R(*this);
    for (std::size_t i = 0; i < data_.size(); ++i) F_->add_into(R.data_[i], o.data_[i]);
    return R;
}

template <class B>
Matrix<B> Matrix<B>::operator-(const Matrix& o) const {
    require(rows_ == o.rows_ && cols_ == o.cols_, ErrorKind::ShapeMismatch, "matrix difference shape mismatch");
    Matrix R(*this);
    for (std::size_t i = 0; i < data_.size(); ++i) R.data_[i] = F_->sub(data_[i], o.data_[i]);
    return R;
}

template <class B>
Matrix<B> Matrix<B>::scaled(const Element& c) const {
    Matrix R(*this);
    for (auto& v : R.data_) v = F_->mul(c, v);
    return R;
}

template <class B>
Matrix<B> Matrix<B>::transpose() const {
    Matrix R(*F_, cols_, rows_);
    for (int i = 0; i < rows_; ++i)
        for (int j = 0; j < cols_; ++j) R(j, i) = (*this)(i, j);
    return R;
}

template <class B>
std::vector<Elem<B>> Matrix<B>::apply(const std::vector<Element>& v) const {
    require(static_cast<int>(v.size()) == cols_, ErrorKind::ShapeMismatch, "matrix-vector shape mismatch");
    std::vector<Element> r(rows_, F_->zero());
    for (int i = 0; i < rows_; ++i)
        for (int j = 0; j < cols_; ++j)
            if (!F_->is_zero(v[j])) F_->add_into(r[i], F_->mul((*this)(i, j), v[j]));
    return r;
}

template <class B>
bool Matrix<B>::operator==(const Matrix& o) const {
    if (rows_ != o.rows_ || cols_ != o.cols_) return false;
    for (std::size_t i = 0; i < data_.size(); ++i)
        if (!F_->equal(data_[i], o.data_[i])) return false;
    return true;
}

template <class B>
bool Matrix<B>::is_zero() const {
    for (const auto& v : data_)
        if (!F_->is_zero(v)) return false;
    return true;
}

template <class B>
std::vector<Elem<B>> Matrix<B>::flatten_over(const Field<B>& sub) const {
    std::vector<Element> out;
    for (const auto& v : data_)
        for (auto& c : F_->coordinates_over(sub, v)) out.push_back(std::move(c));
    return out;
}

namespace {

// Elimination over F_p on packed residues through the row kernels.
std::vector<int> rref_prime(std::vector<std::uint32_t>& a, int rows, int cols, const PrimeBase& D) {
    const auto& K = simd::active_kernels();
    const std::uint32_t p = D.characteristic();
    const std::size_t stride = static_cast<std::size_t>(cols);
    std::vector<int> pivots;
    int r = 0;
    for (int c = 0; c < cols && r < rows; ++c) {
        int piv = -1;
        for (int i = r; i < rows; ++i)
            if (a[i * stride + c] != 0) {
                piv = i;
                break;
            }
        if (piv < 0) continue;
        if (piv != r)
            for (int j = 0; j < cols; ++j) std::swap(a[piv * stride + j], a[r * stride + j]);
        std::uint32_t* prow = &a[r * stride];
        K.scale(prow + c, D.inv(prow[c]), p, cols - c);
        for (int i = 0; i < rows; ++i) {
            if (i == r) continue;
            std::uint32_t f = a[i * stride + c];
            if (f != 0) K.axpy(&a[i * stride + c], prow + c, p - f, p, cols - c);
        }
        pivots.push_back(c);
        ++r;
    }
    return pivots;
}

}  // namespace

template <class B>
std::vector<int> rref(Matrix<B>& M) {
    const Field<B>& F = M.field();
    if constexpr (std::is_same_v<B, PrimeBase>) {
        if (F.is_prime() && F.domain().characteristic() < simd::kMaxKernelPrime) {
            std::vector<std::uint32_t> a(static_cast<std::size_t>(M.rows()) * M.cols());
            for (int i = 0; i < M.rows(); ++i)
                for (int j = 0; j < M.cols(); ++j) a[static_cast<std::size_t>(i) * M.cols() + j] = M(i, j)[0];
            auto piv = rref_prime(a, M.rows(), M.cols(), F.domain());
            for (int i = 0; i < M.rows(); ++i)
                for (int j = 0; j < M.cols(); ++j) M(i, j)[0] = a[static_cast<std::size_t>(i) * M.cols() + j];
            return piv;
        }
    }
    std::vector<int> pivots;
    int r = 0;
    for (int c = 0; c < M.cols() && r < M.rows(); ++c) {
        int piv = -1;
        for (int i = r; i < M.rows(); ++i)
            if (!F.is_zero(M(i, c))) {
                piv = i;
                break;
            }
        if (piv < 0) continue;
        if (piv != r)
            for (int j = 0; j < M.cols(); ++j) std::swap(M(piv, j), M(r, j));
        auto inv = F.inv(M(r, c));
        for (int j = c; j < M.cols(); ++j) M(r, j) = F.mul(inv, M(r, j));
        for (int i = 0; i < M.rows(); ++i) {
            if (i == r || F.is_zero(M(i, c))) continue;
            auto f = M(i, c);
            for (int j = c; j < M.cols(); ++j)
                if (!F.is_zero(M(r, j))) M(i, j) = F.sub(M(i, j), F.mul(f, M(r, j)));
        }
        pivots.push_back(c);
        ++r;
    }
    return pivots;
}

template <class B>
int rank(Matrix<B> M) {
    return static_cast<int>(rref(M).size());
}

template <class B>
std::vector<std::vector<Elem<B>>> nullspace(Matrix<B> M) {
    const Field<B>& F = M.field();
    auto pivots = rref(M);
    std::vector<bool> is_pivot(M.cols(), false);
    for (int c : pivots) is_pivot[c] = true;
    std::vector<std::vector<Elem<B>>> basis;
    for (int free = 0; free < M.cols(); ++free) {
        if (is_pivot[free]) continue;
        std::vector<Elem<B>> v(M.cols(), F.zero());
        v[free] = F.one();
        for (std::size_t r = 0; r < pivots.size(); ++r) v[pivots[r]] = F.neg(M(static_cast<int>(r), free));
        basis.push_back(std::move(v));
    }
    return basis;
}

template <class B>
std::optional<std::vector<Elem<B>>> solve(Matrix<B> A, const std::vector<Elem<B>>& b) {
    const Field<B>& F = A.field();
    require(static_cast<int>(b.size()) == A.rows(), ErrorKind::ShapeMismatch, "right-hand side length mismatch");
    Matrix<B> Aug(F, A.rows(), A.cols() + 1);
    for (int i = 0; i < A.rows(); ++i) {
        for (int j = 0; j < A.cols(); ++j) Aug(i, j) = A(i, j);
        Aug(i, A.cols()) = b[i];
    }
    auto pivots = rref(Aug);
    if (!pivots.empty() && pivots.back() == A.cols()) return std::nullopt;
    std::vector<Elem<B>> x(A.cols(), F.zero());
    for (std::size_t r = 0; r < pivots.size(); ++r) x[pivots[r]] = Aug(static_cast<int>(r), A.cols());
    return x;
}

template <class B>
std::optional<Matrix<B>> inverse(const Matrix<B>& A) {
    require(A.rows() == A.cols(), ErrorKind::ShapeMismatch, "inverse of a non-square matrix");
    const Field<B>& F = A.field();
    int n = A.rows();
    Matrix<B> Aug(F, n, 2 * n);
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) Aug(i, j) = A(i, j);
        Aug(i, n + i) = F.one();
    }
    auto pivots = rref(Aug);
    if (static_cast<int>(pivots.size()) < n || pivots[n - 1] != n - 1) return std::nullopt;
    Matrix<B> R(F, n, n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) R(i, j) = Aug(i, n + j);
    return R;
}

template <class B>
Elem<B> determinant(Matrix<B> A) {
    require(A.rows() == A.cols(), ErrorKind::ShapeMismatch, "determinant of a non-square matrix");
    const Field<B>& F = A.field();
    int n = A.rows();
    auto det = F.one();
    for (int c = 0; c < n; ++c) {
        int piv = -1;
        for (int i = c; i < n; ++i)
            if (!F.is_zero(A(i, c))) {
                piv = i;
                break;
            }
        if (piv < 0) return F.zero();
        if (piv != c) {
            for (int j = 0; j < n; ++j) std::swap(A(piv, j), A(c, j));
            det = F.neg(det);
        }
        det = F.mul(det, A(c, c));
        auto inv = F.inv(A(c, c));
        for (int i = c + 1; i < n; ++i) {
            if (F.is_zero(A(i, c))) continue;
            auto f = F.mul(A(i, c), inv);
            for (int j = c; j < n; ++j) A(i, j) = F.sub(A(i, j), F.mul(f, A(c, j)));
        }
    }
    return det;
}

template <class B>
void EchelonBasis<B>::reduce(std::vector<Element>& v, std::vector<Element>& combo) const {
    for (const auto& row : rows_) {
        const auto& c = v[row.pivot];
        if (F_->is_zero(c)) continue;
        auto f = c;
        for (int j = 0; j < length_; ++j)
            if (!F_->is_zero(row.vec[j])) v[j] = F_->sub(v[j], F_->mul(f, row.vec[j]));
        for (std::size_t j = 0; j < row.combo.size(); ++j)
            if (!F_->is_zero(row.combo[j])) combo[j] = F_->sub(combo[j], F_->mul(f, row.combo[j]));
    }
}

template <class B>
bool EchelonBasis<B>::insert(const std::vector<Element>& v0) {
    require(static_cast<int>(v0.size()) == length_, ErrorKind::ShapeMismatch, "vector length mismatch");
    std::vector<Element> v = v0;
    std::vector<Element> combo(accepted_ + 1, F_->zero());
    for (auto& row : rows_) row.combo.resize(accepted_ + 1, F_->zero());
    combo[accepted_] = F_->one();
    reduce(v, combo);
    int pivot = -1;
    for (int j = 0; j < length_; ++j)
        if (!F_->is_zero(v[j])) {
            pivot = j;
            break;
        }
    if (pivot < 0) return false;
    auto inv = F_->inv(v[pivot]);
    for (auto& x : v) x = F_->mul(inv, x);
    for (auto& x : combo) x = F_->mul(inv, x);
    // keep existing rows reduced against the new pivot
    for (auto& row : rows_) {
        if (F_->is_zero(row.vec[pivot])) continue;
        auto f = row.vec[pivot];
        for (int j = 0; j < length_; ++j) row.vec[j] = F_->sub(row.vec[j], F_->mul(f, v[j]));
        for (std::size_t j = 0; j < combo.size(); ++j) row.combo[j] = F_->sub(row.combo[j], F_->mul(f, combo[j]));
    }
    rows_.push_back(Row{pivot, std::move(v), std::move(combo)});
    ++accepted_;
    return true;
}

template <class B>
std::optional<std::vector<Elem<B>>> EchelonBasis<B>::express(const std::vector<Element>& v0) const {
    require(static_cast<int>(v0.size()) == length_, ErrorKind::ShapeMismatch, "vector length mismatch");
    // v - sum f_r row_r = 0 with row_r = sum combo_r[j] accepted_j
    std::vector<Element> v = v0;
    std::vector<Element> coeffs(accepted_, F_->zero());
    for (const auto& row : rows_) {
        const auto f = v[row.pivot];
        if (F_->is_zero(f)) continue;
        for (int j = 0; j < length_; ++j)
            if (!F_->is_zero(row.vec[j])) v[j] = F_->sub(v[j], F_->mul(f, row.vec[j]));
        for (std::size_t j = 0; j < row.combo.size() && j < accepted_; ++j)
            F_->add_into(coeffs[j], F_->mul(f, row.combo[j]));
    }
    for (const auto& x : v)
        if (!F_->is_zero(x)) return std::nullopt;
    return coeffs;
}

#define SKEWMRD_LINALG_INSTANTIATE(B)                                                     \
    template class Matrix<B>;                                                            \
    template class EchelonBasis<B>;                                                      \
    template std::vector<int> rref<B>(Matrix<B>&);                                       \
    template int rank<B>(Matrix<B>);                                                     \
    template std::vector<std::vector<Elem<B>>> nullspace<B>(Matrix<B>);                 \
    template std::optional<std::vector<Elem<B>>> solve<B>(Matrix<B>, const std::vector<Elem<B>>&); \
    template std::optional<Matrix<B>> inverse<B>(const Matrix<B>&);                      \
    template Elem<B> determinant<B>(Matrix<B>);

SKEWMRD_LINALG_INSTANTIATE(PrimeBase)
SKEWMRD_LINALG_INSTANTIATE(RationalBase)

}  // namespace skewmrd
