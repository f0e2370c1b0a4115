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

#ifndef SKEWMRD_LINALG_HPP
#define SKEWMRD_LINALG_HPP

#include <optional>
#include <vector>

#include "field.hpp"

namespace skewmrd {

/// Dense row-major matrix over a field of the tower.
template <class B>
class Matrix {
   public:
    using Element = Elem<B>;

    Matrix(const Field<B>& F, int rows, int cols);
    static Matrix identity(const Field<B>& F, int n);

    const Field<B>& field() const noexcept { return *F_; }
    int rows() const noexcept { return rows_; }
    int cols() const noexcept { return cols_; }
    Element& operator()(int r, int c) { return data_[static_cast<std::size_t>(r) * cols_ + c]; }
    const Element& operator()(int r, int c) const { return data_[static_cast<std::size_t>(r) * cols_ + c]; }

    Matrix operator*(const Matrix& o) const;
    Matrix operator+(const Matrix& o) const;
    Matrix operator-(const Matrix& o) const;
    Matrix scaled(const Element& c) const;
    Matrix transpose() const;
    std::vector<Element> apply(const std::vector<Element>& v) const;
    bool operator==(const Matrix& o) const;
    bool is_zero() const;
    /// Row-major flattening of all entries into coordinates over `sub`.
    std::vector<Element> flatten_over(const Field<B>& sub) const;

   private:
    const Field<B>* F_;
    int rows_, cols_;
    std::vector<Element> data_;
};

/// In-place reduced row echelon form; returns the pivot columns.
template <class B>
std::vector<int> rref(Matrix<B>& M);
template <class B>
int rank(Matrix<B> M);
/// Basis of the right kernel {x : M x = 0}.
template <class B>
std::vector<std::vector<Elem<B>>> nullspace(Matrix<B> M);
template <class B>
std::optional<std::vector<Elem<B>>> solve(Matrix<B> A, const std::vector<Elem<B>>& b);
template <class B>
std::optional<Matrix<B>> inverse(const Matrix<B>& A);
template <class B>
Elem<B> determinant(Matrix<B> A);

/*
 * Incrementally grown echelon basis. Each stored row remembers which
 * combination of the inserted vectors produced it, so a dependent vector
 * can be expressed in terms of the vectors accepted so far.
 */
template <class B>
class EchelonBasis {
   public:
    using Element = Elem<B>;

    EchelonBasis(const Field<B>& F, int length) : F_(&F), length_(length) {}

    int size() const noexcept { return static_cast<int>(accepted_); }
    /// Adds v when independent of the accepted vectors; returns whether it was added.
    bool insert(const std::vector<Element>& v);
    /// Coefficients c with v = sum c_i * accepted_i, if v lies in the span.
    std::optional<std::vector<Element>> express(const std::vector<Element>& v) const;

   private:
    struct Row {
        int pivot;
        std::vector<Element> vec;
        std::vector<Element> combo;
    };
    void reduce(std::vector<Element>& v, std::vector<Element>& combo) const;

    const Field<B>* F_;
    int length_;
    std::size_t accepted_ = 0;
    std::vector<Row> rows_;
};

}  // namespace skewmrd

#endif
