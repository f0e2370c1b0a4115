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

#include "skewmrd/io.hpp"

#include <charconv>
#include <set>

namespace skewmrd {

namespace {

std::string_view trim(std::string_view s) {
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
    return s;
}

// Splits on `sep`, keeping the offset of each (trimmed) piece.
std::vector<std::pair<std::string, int>> split(std::string_view s, char sep) {
    std::vector<std::pair<std::string, int>> out;
    std::size_t start = 0;
    while (true) {
        std::size_t end = s.find(sep, start);
        auto piece = s.substr(start, end == std::string_view::npos ? std::string_view::npos : end - start);
        std::size_t lead = 0;
        while (lead < piece.size() && std::isspace(static_cast<unsigned char>(piece[lead]))) ++lead;
        out.emplace_back(std::string(trim(piece)), static_cast<int>(start + lead));
        if (end == std::string_view::npos) break;
        start = end + 1;
    }
    return out;
}

struct Line {
    int number;
    std::string_view text;
};

std::vector<Line> lines_of(std::string_view text) {
    std::vector<Line> out;
    int number = 1;
    std::size_t start = 0;
    while (start < text.size()) {
        std::size_t end = text.find('\n', start);
        auto line = text.substr(start, end == std::string_view::npos ? std::string_view::npos : end - start);
        if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
        out.push_back({number++, line});
        if (end == std::string_view::npos) break;
        start = end + 1;
    }
    return out;
}

template <class Int>
Int parse_int(std::string_view v, int line, int column, const char* what) {
    Int out{};
    auto [ptr, ec] = std::from_chars(v.data(), v.data() + v.size(), out);
    if (ec != std::errc() || ptr != v.data() + v.size() || v.empty())
        throw ParseError(line, column, std::string("expected ") + what + ", got '" + std::string(v) + "'");
    return out;
}

struct KeyValue {
    std::string key, value;
    int line, column;  // column of the value
};

// Splits `key = value`, ignoring blank lines and # comments.
std::optional<KeyValue> key_value(const Line& ln) {
    auto hash = ln.text.find('#');
    auto body = ln.text.substr(0, hash);
    if (trim(body).empty()) return std::nullopt;
    auto eq = body.find('=');
    if (eq == std::string_view::npos) {
        std::size_t col = 0;
        while (col < body.size() && std::isspace(static_cast<unsigned char>(body[col]))) ++col;
        throw ParseError(ln.number, static_cast<int>(col) + 1, "expected 'key = value'");
    }
    std::size_t vstart = eq + 1;
    while (vstart < body.size() && std::isspace(static_cast<unsigned char>(body[vstart]))) ++vstart;
    return KeyValue{std::string(trim(body.substr(0, eq))), std::string(trim(body.substr(eq + 1))), ln.number,
                    static_cast<int>(vstart) + 1};
}

}  // namespace

bool SpecFile::operator==(const SpecFile& o) const {
    return base == o.base && extensions == o.extensions && algebra == o.algebra && sigma == o.sigma &&
           inner == o.inner && f == o.f && l == o.l && nu == o.nu && rho == o.rho && budget == o.budget &&
           jobs == o.jobs && assume_similar_in_E == o.assume_similar_in_E && mode == o.mode;
}

SpecFile parse_spec(std::string_view text) {
    static const std::map<std::string, std::set<std::string>> keys{
        {"tower", {"base", "extension"}},
        {"algebra", {"center", "gamma", "a"}},
        {"ring", {"sigma", "inner"}},
        {"poly", {"f"}},
        {"code", {"l", "nu", "rho"}},
        {"run", {"budget", "jobs", "assume_similar_in_E", "mode"}},
    };
    SpecFile spec;
    std::string section;
    std::set<std::string> seen_sections, seen_keys;
    int last_line = 0;
    for (const auto& ln : lines_of(text)) {
        last_line = ln.number;
        auto body = trim(ln.text.substr(0, ln.text.find('#')));
        if (!body.empty() && body.front() == '[') {
            const int col = static_cast<int>(ln.text.find('[')) + 1;
            if (body.back() != ']') throw ParseError(ln.number, col, "unterminated section header");
            section = std::string(trim(body.substr(1, body.size() - 2)));
            if (!keys.count(section)) throw ParseError(ln.number, col + 1, "unknown section '" + section + "'");
            if (!seen_sections.insert(section).second)
                throw ParseError(ln.number, col + 1, "duplicate section '" + section + "'");
            if (section == "algebra") spec.algebra.emplace();
            continue;
        }
        auto kv = key_value(ln);
        if (!kv) continue;
        const int key_col = static_cast<int>(ln.text.find(kv->key)) + 1;
        if (section.empty()) throw ParseError(ln.number, key_col, "key outside of a section");
        if (!keys.at(section).count(kv->key))
            throw ParseError(ln.number, key_col, "unknown key '" + kv->key + "' in [" + section + "]");
        std::string where = section + "." + kv->key;
        if (kv->key == "extension") {
            where += "." + std::to_string(spec.extensions.size());
        } else if (!seen_keys.insert(where).second) {
            throw ParseError(ln.number, key_col, "duplicate key '" + kv->key + "'");
        }
        if (kv->value.empty()) throw ParseError(ln.number, kv->column, "empty value for '" + kv->key + "'");
        spec.positions[where] = {kv->line, kv->column};
        const auto& v = kv->value;
        if (where == "tower.base") {
            if (v != "Q") parse_int<std::uint32_t>(v, kv->line, kv->column, "a prime or Q");
            spec.base = v;
        } else if (kv->key == "extension") {
            auto colon = v.find(':');
            if (colon == std::string::npos) throw ParseError(kv->line, kv->column, "expected 'name : modulus'");
            std::string name(trim(std::string_view(v).substr(0, colon)));
            std::string modulus(trim(std::string_view(v).substr(colon + 1)));
            if (name.empty() || modulus.empty())
                throw ParseError(kv->line, kv->column, "expected 'name : modulus'");
            spec.extensions.push_back({name, modulus});
        } else if (where == "algebra.center") {
            spec.algebra->center = v;
        } else if (where == "algebra.gamma") {
            spec.algebra->gamma = v;
        } else if (where == "algebra.a") {
            spec.algebra->a = v;
        } else if (where == "ring.sigma") {
            spec.sigma = v;
        } else if (where == "ring.inner") {
            spec.inner = v;
        } else if (where == "poly.f") {
            spec.f = v;
        } else if (where == "code.l") {
            spec.l = parse_int<int>(v, kv->line, kv->column, "an integer");
        } else if (where == "code.nu") {
            spec.nu = v;
        } else if (where == "code.rho") {
            spec.rho = v;
        } else if (where == "run.budget") {
            spec.budget = parse_int<std::uint64_t>(v, kv->line, kv->column, "an integer");
        } else if (where == "run.jobs") {
            spec.jobs = parse_int<int>(v, kv->line, kv->column, "an integer");
        } else if (where == "run.assume_similar_in_E") {
            if (v != "true" && v != "false") throw ParseError(kv->line, kv->column, "expected true or false");
            spec.assume_similar_in_E = v == "true";
        } else if (where == "run.mode") {
            if (v != "exhaustive" && v != "gcrd-exhaustive")
                throw ParseError(kv->line, kv->column, "mode must be exhaustive or gcrd-exhaustive");
            spec.mode = v;
        }
    }
    const int end = last_line + 1;
    if (spec.base.empty()) throw ParseError(end, 1, "missing 'base' in [tower]");
    if (spec.f.empty()) throw ParseError(end, 1, "missing 'f' in [poly]");
    if (spec.algebra && (spec.algebra->center.empty() || spec.algebra->gamma.empty() || spec.algebra->a.empty()))
        throw ParseError(end, 1, "[algebra] needs center, gamma and a");
    return spec;
}

std::string serialize(const SpecFile& spec) {
    std::string out = "[tower]\nbase = " + spec.base + "\n";
    for (const auto& e : spec.extensions) out += "extension = " + e.name + " : " + e.modulus + "\n";
    if (spec.algebra) {
        out += "[algebra]\ncenter = " + spec.algebra->center + "\ngamma = " + spec.algebra->gamma +
               "\na = " + spec.algebra->a + "\n";
    }
    out += "[ring]\nsigma = " + spec.sigma + "\n";
    if (!spec.inner.empty()) out += "inner = " + spec.inner + "\n";
    out += "[poly]\nf = " + spec.f + "\n";
    out += "[code]\nl = " + std::to_string(spec.l) + "\nnu = " + spec.nu + "\nrho = " + spec.rho + "\n";
    out += "[run]\nbudget = " + std::to_string(spec.budget) + "\njobs = " + std::to_string(spec.jobs) +
           "\nassume_similar_in_E = " + (spec.assume_similar_in_E ? "true" : "false") + "\nmode = " + spec.mode +
           "\n";
    return out;
}

namespace {

// Runs `fn`, prefixing any error with the position of the value `where`.
template <class Fn>
auto at(const SpecFile& spec, const std::string& where, Fn&& fn) -> decltype(fn()) {
    auto it = spec.positions.find(where);
    const auto pos = it == spec.positions.end() ? std::pair<int, int>{0, 0} : it->second;
    try {
        return fn();
    } catch (const ParseError& e) {
        if (e.line() != 0) throw;
        std::string what = e.what();
        throw ParseError(pos.first, pos.second, what.substr(what.find(' ') + 1));
    } catch (const Error& e) {
        if (e.kind() == ErrorKind::Parse) throw ParseError(pos.first, pos.second, e.what());
        throw Error(e.kind(), std::to_string(pos.first) + ":" + std::to_string(pos.second) + ": " + e.what());
    }
}

template <class B>
std::vector<Elem<B>> parse_list(const DivisionRing<B>& R, const std::string& text, char sep) {
    std::vector<Elem<B>> out;
    for (const auto& [piece, offset] : split(text, sep)) out.push_back(R.parse(piece));
    return out;
}

template <class B>
Automorphism<B> parse_automorphism(const std::shared_ptr<const DivisionRing<B>>& D, const std::string& text) {
    auto words = trim(text);
    if (words == "identity") return Automorphism<B>::identity(D);
    if (words.rfind("frobenius", 0) == 0) {
        auto arg = trim(words.substr(9));
        return Automorphism<B>::frobenius(D, parse_int<long long>(arg, 0, 0, "a Frobenius exponent"));
    }
    if (words.rfind("images", 0) == 0) return Automorphism<B>::from_images(D, parse_list(*D, std::string(words.substr(6)), ';'));
    fail(ErrorKind::Parse, "expected identity, frobenius k or images x;y;...");
}

template <class B>
FieldPtr<B> prime_field(const std::string& base);

template <>
FieldPtr<PrimeBase> prime_field<PrimeBase>(const std::string& base) {
    require(base != "Q", ErrorKind::ContextMismatch, "rational base in a prime-field instance");
    auto p = static_cast<std::uint32_t>(std::stoul(base));
    return Field<PrimeBase>::prime(PrimeBase(p), "F" + base);
}

template <>
FieldPtr<RationalBase> prime_field<RationalBase>(const std::string& base) {
    require(base == "Q", ErrorKind::ContextMismatch, "prime-field base in a rational instance");
    return Field<RationalBase>::prime(RationalBase(), "Q");
}

}  // namespace

template <class B>
Instance<B> instantiate(const SpecFile& spec) {
    std::vector<FieldPtr<B>> levels{at(spec, "tower.base", [&] { return prime_field<B>(spec.base); })};
    for (std::size_t i = 0; i < spec.extensions.size(); ++i) {
        const auto& e = spec.extensions[i];
        levels.push_back(at(spec, "tower.extension." + std::to_string(i), [&] {
            return Field<B>::extension(levels.back(), parse_list(*levels.back(), e.modulus, ','), e.name);
        }));
    }
    std::shared_ptr<const DivisionRing<B>> D = levels.back();
    if (spec.algebra) {
        const auto& a = *spec.algebra;
        auto C = at(spec, "algebra.center", [&] {
            for (const auto& lv : levels)
                if ((lv->is_prime() && a.center == "base") || (!lv->is_prime() && lv->generator_name() == a.center))
                    return lv;
            fail(ErrorKind::Parse, "no tower level named '" + a.center + "'");
        });
        auto images = at(spec, "algebra.gamma", [&] { return parse_list(*levels.back(), a.gamma, ';'); });
        auto av = at(spec, "algebra.a", [&] { return C->parse(a.a); });
        D = at(spec, "algebra.gamma", [&] { return CyclicAlgebra<B>::make(levels.back(), C, images, av); });
    }
    auto sigma = at(spec, "ring.sigma", [&] { return parse_automorphism(D, spec.sigma); });
    if (!spec.inner.empty()) {
        sigma = at(spec, "ring.inner", [&] {
            auto colon = spec.inner.find(':');
            if (colon == std::string::npos) fail(ErrorKind::Parse, "expected 'n : u'");
            auto n = parse_int<int>(trim(std::string_view(spec.inner).substr(0, colon)), 0, 0, "an integer");
            return sigma.with_inner(n, D->parse(std::string(trim(std::string_view(spec.inner).substr(colon + 1)))));
        });
    }
    RingContext<B> ctx = at(spec, "ring.sigma", [&] { return RingContext<B>(SkewRing<B>(sigma)); });
    auto f = at(spec, "poly.f", [&] { return ctx.ring().parse(spec.f); });
    auto nu = at(spec, "code.nu", [&] { return D->parse(spec.nu); });
    auto rho = at(spec, "code.rho", [&] { return parse_automorphism(D, spec.rho); });
    return Instance<B>{std::move(levels), D, std::move(ctx), std::move(f), std::move(nu), std::move(rho)};
}

template <class B>
std::string format_automorphism(const Automorphism<B>& phi) {
    if (phi.is_identity()) return "identity";
    std::string out = "images ";
    auto images = phi.images();
    for (std::size_t i = 0; i < images.size(); ++i) out += (i ? ";" : "") + phi.ring().format(images[i]);
    return out;
}

CodeFile parse_code(std::string_view text) {
    static const char* kMagic = "skewmrd-code 1";
    CodeFile code;
    std::set<std::string> seen;
    bool magic = false;
    int last_line = 0;
    for (const auto& ln : lines_of(text)) {
        last_line = ln.number;
        if (!magic) {
            if (trim(ln.text) != kMagic) throw ParseError(ln.number, 1, std::string("expected '") + kMagic + "'");
            magic = true;
            continue;
        }
        auto kv = key_value(ln);
        if (!kv) continue;
        const int key_col = static_cast<int>(ln.text.find(kv->key)) + 1;
        const auto& v = kv->value;
        if (kv->key == "generator") {
            code.generators.push_back({v, {}});
            continue;
        }
        if (kv->key == "row") {
            if (code.generators.empty()) throw ParseError(ln.number, key_col, "row before the first generator");
            std::vector<std::string> row;
            for (auto& [piece, offset] : split(v, ',')) {
                if (piece.empty()) throw ParseError(ln.number, kv->column + offset, "empty matrix entry");
                row.push_back(piece);
            }
            code.generators.back().rows.push_back(std::move(row));
            continue;
        }
        if (!code.generators.empty()) throw ParseError(ln.number, key_col, "header key after the generators");
        if (!seen.insert(kv->key).second) throw ParseError(ln.number, key_col, "duplicate key '" + kv->key + "'");
        if (kv->key == "f") {
            code.f = v;
        } else if (kv->key == "l") {
            code.l = parse_int<int>(v, kv->line, kv->column, "an integer");
        } else if (kv->key == "nu") {
            code.nu = v;
        } else if (kv->key == "rho") {
            code.rho = v;
        } else if (kv->key == "hhat") {
            code.hhat = v;
        } else if (kv->key == "k") {
            code.k = parse_int<int>(v, kv->line, kv->column, "an integer");
        } else if (kv->key == "dim_Fprime") {
            code.dim_Fprime = parse_int<int>(v, kv->line, kv->column, "an integer");
        } else if (kv->key == "basis") {
            for (auto& [piece, offset] : split(v, ';')) code.basis.push_back(piece);
        } else {
            throw ParseError(ln.number, key_col, "unknown key '" + kv->key + "'");
        }
    }
    const int end = last_line + 1;
    if (!magic) throw ParseError(1, 1, std::string("expected '") + kMagic + "'");
    for (const char* key : {"f", "l", "nu", "rho", "hhat", "k", "dim_Fprime", "basis"})
        if (!seen.count(key)) throw ParseError(end, 1, std::string("missing key '") + key + "'");
    if (static_cast<int>(code.basis.size()) != code.k) throw ParseError(end, 1, "basis length differs from k");
    if (static_cast<int>(code.generators.size()) != code.dim_Fprime)
        throw ParseError(end, 1, "generator count differs from dim_Fprime");
    for (const auto& g : code.generators) {
        bool square = static_cast<int>(g.rows.size()) == code.k;
        for (const auto& r : g.rows) square = square && static_cast<int>(r.size()) == code.k;
        if (!square) throw ParseError(end, 1, "generator " + g.a + " is not a k x k matrix");
    }
    return code;
}

std::string serialize(const CodeFile& code) {
    std::string out = "skewmrd-code 1\n";
    out += "f = " + code.f + "\nl = " + std::to_string(code.l) + "\nnu = " + code.nu + "\nrho = " + code.rho +
           "\nhhat = " + code.hhat + "\nk = " + std::to_string(code.k) +
           "\ndim_Fprime = " + std::to_string(code.dim_Fprime) + "\nbasis = ";
    for (std::size_t i = 0; i < code.basis.size(); ++i) out += (i ? ";" : "") + code.basis[i];
    out += "\n";
    for (const auto& g : code.generators) {
        out += "generator = " + g.a + "\n";
        for (const auto& row : g.rows) {
            out += "row = ";
            for (std::size_t c = 0; c < row.size(); ++c) out += (c ? "," : "") + row[c];
            out += "\n";
        }
    }
    return out;
}

template <class B>
CodeFile make_code_file(const CodeSpec<B>& spec, const VfBasis<B>& basis, const SpreadSet<B>& set) {
    const auto& R = spec.ctx.ring();
    const auto& F = spec.ctx.F();
    const auto& Eh = basis.ehat();
    CodeFile code;
    code.f = R.format(spec.f);
    code.l = spec.l;
    code.nu = spec.ctx.D().format(spec.nu);
    code.rho = format_automorphism(spec.rho);
    for (std::size_t i = 0; i < spec.report.hhat.size(); ++i)
        code.hhat += (i ? "," : "") + F.format(spec.report.hhat[i]);
    code.k = basis.k();
    code.dim_Fprime = spec.dim_A();
    for (const auto& r : basis.residues()) code.basis.push_back(R.format(r));
    for (std::size_t p = 0; p < set.generators.size(); ++p) {
        CodeFile::Generator g{R.format(set.generators[p]), {}};
        const auto& M = set.matrices[p];
        for (int r = 0; r < M.rows(); ++r) {
            std::vector<std::string> row;
            for (int c = 0; c < M.cols(); ++c) row.push_back(Eh.format(M(r, c)));
            g.rows.push_back(std::move(row));
        }
        code.generators.push_back(std::move(g));
    }
    return code;
}

template <class B>
std::vector<Matrix<B>> decode_matrices(const CodeFile& code, const Field<B>& ehat) {
    std::vector<Matrix<B>> out;
    for (const auto& g : code.generators) {
        Matrix<B> M(ehat, code.k, code.k);
        for (int r = 0; r < code.k; ++r)
            for (int c = 0; c < code.k; ++c) M(r, c) = ehat.parse(g.rows[r][c]);
        out.push_back(std::move(M));
    }
    return out;
}

#define SKEWMRD_IO_INSTANTIATE(B)                                                                             \
    template Instance<B> instantiate<B>(const SpecFile&);                                                    \
    template std::string format_automorphism<B>(const Automorphism<B>&);                                     \
    template CodeFile make_code_file<B>(const CodeSpec<B>&, const VfBasis<B>&, const SpreadSet<B>&);         \
    template std::vector<Matrix<B>> decode_matrices<B>(const CodeFile&, const Field<B>&);

SKEWMRD_IO_INSTANTIATE(PrimeBase)
SKEWMRD_IO_INSTANTIATE(RationalBase)

}  // namespace skewmrd
