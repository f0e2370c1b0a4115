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

#ifndef SKEWMRD_IO_HPP
#define SKEWMRD_IO_HPP

#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "code_factory.hpp"

namespace skewmrd {

/// Parse failure with a 1-based source position.
class ParseError : public Error {
   public:
    ParseError(int line, int column, const std::string& what)
        : Error(ErrorKind::Parse, std::to_string(line) + ":" + std::to_string(column) + ": " + what),
          line_(line),
          column_(column) {}
    int line() const noexcept { return line_; }
    int column() const noexcept { return column_; }

   private:
    int line_, column_;
};

/*
 * Line-oriented instance description:
 *
 *   [tower]      base = 2 | Q, then one `extension = name : modulus` per level
 *   [algebra]    optional cyclic algebra over the top field: center, gamma, a
 *   [ring]       sigma = identity | frobenius k | images x;y;...  and optional inner = n : u
 *   [poly]       f = coefficients, constant first
 *   [code]       l, nu, rho
 *   [run]        budget, jobs, assume_similar_in_E, mode
 *
 * Values are kept as text; instantiate() turns them into rings and elements.
 */
struct SpecFile {
    struct Extension {
        std::string name, modulus;
        bool operator==(const Extension&) const = default;
    };
    struct Algebra {
        std::string center, gamma, a;
        bool operator==(const Algebra&) const = default;
    };

    std::string base;
    std::vector<Extension> extensions;
    std::optional<Algebra> algebra;
    std::string sigma = "identity";
    std::string inner;  ///< empty when sigma has no inner part
    std::string f;
    int l = 1;
    std::string nu = "0";
    std::string rho = "identity";
    std::uint64_t budget = 1u << 20;
    int jobs = 1;
    bool assume_similar_in_E = false;
    std::string mode = "exhaustive";

    /// Source position of each value as "section.key" -> (line, column); not compared.
    std::map<std::string, std::pair<int, int>> positions;

    bool operator==(const SpecFile& o) const;
    bool is_rational() const noexcept { return base == "Q"; }
};

SpecFile parse_spec(std::string_view text);
std::string serialize(const SpecFile& spec);

/// The rings and elements described by a spec file.
template <class B>
struct Instance {
    std::vector<FieldPtr<B>> levels;  ///< prime field first
    std::shared_ptr<const DivisionRing<B>> D;
    RingContext<B> ctx;
    SkewPoly<B> f;
    Elem<B> nu;
    Automorphism<B> rho;
};

/// Element-level errors are reported as ParseError at the offending value.
template <class B>
Instance<B> instantiate(const SpecFile& spec);

/// Text form of an automorphism as images of the ring generators.
template <class B>
std::string format_automorphism(const Automorphism<B>& phi);

/*
 * Spread set file: a header with f, l, nu, rho, hhat, k and the F'-dimension,
 * the V_f basis residues, then one `generator = a` line per generator of A
 * followed by its k rows over E_hhat.
 */
struct CodeFile {
    struct Generator {
        std::string a;
        std::vector<std::vector<std::string>> rows;
        bool operator==(const Generator&) const = default;
    };
    std::string f, nu, rho, hhat;
    int l = 1;
    int k = 0;
    int dim_Fprime = 0;
    std::vector<std::string> basis;
    std::vector<Generator> generators;
    bool operator==(const CodeFile&) const = default;
};

CodeFile parse_code(std::string_view text);
std::string serialize(const CodeFile& code);

template <class B>
CodeFile make_code_file(const CodeSpec<B>& spec, const VfBasis<B>& basis, const SpreadSet<B>& set);

/// Matrices of a code file read back over E_hhat.
template <class B>
std::vector<Matrix<B>> decode_matrices(const CodeFile& code, const Field<B>& ehat);

}  // namespace skewmrd

#endif
