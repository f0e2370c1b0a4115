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

// Command-line front end: mclm, norm, build-code, check and rank on a spec file.

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

#include "skewmrd/algebra_lab.hpp"
#include "skewmrd/io.hpp"
#include "skewmrd/rank_lab.hpp"

using namespace skewmrd;

namespace {

enum Exit { kOk = 0, kParse = 2, kPrecondition = 3, kUnknown = 4 };

struct Options {
    std::string spec_path, out_path, element, what;
    std::optional<std::uint64_t> budget;
    std::optional<int> jobs;
};

template <class B>
std::string bracketed(const Field<B>& F, const fpoly::Poly<B>& p) {
    std::string out = "[";
    for (std::size_t i = 0; i < p.size(); ++i) out += (i ? "," : "") + F.format(p[i]);
    return out + "]";
}

template <class B>
CodeSpec<B> code_spec(const Instance<B>& inst, const SpecFile& file, std::uint64_t budget) {
    return make_code_spec(inst.ctx, inst.f, file.l, inst.nu, inst.rho, budget);
}

template <class B>
int cmd_mclm(const Instance<B>& inst, std::uint64_t budget) {
    auto rep = mclm(inst.ctx, inst.f);
    auto verdict = is_irreducible(inst.ctx, inst.f, rep, budget);
    const auto& F = inst.ctx.F();
    std::cout << "hhat=" << bracketed(F, rep.hhat) << " k=" << rep.k << " s=" << rep.s
              << " irreducible=" << to_string(verdict.verdict) << "\n";
    std::cout << "h=" << inst.ctx.ring().format(rep.h) << " m=" << rep.m
              << " full_degree=" << (rep.full_degree ? "yes" : "no") << "\n";
    if (verdict.witness) std::cout << "right_divisor=" << inst.ctx.ring().format(*verdict.witness) << "\n";
    return kOk;
}

template <class B>
int cmd_norm(const Instance<B>& inst) {
    std::cout << "norm=" << bracketed(inst.ctx.F(), reduced_norm(inst.ctx, inst.f)) << "\n";
    return kOk;
}

template <class B>
int cmd_build_code(const Instance<B>& inst, const SpecFile& file, const Options& opt, std::uint64_t budget) {
    auto spec = code_spec(inst, file, budget);
    if (spec.s() != 1) {
        std::cerr << "error: matrix emission unsupported for s>1\n";
        return kPrecondition;
    }
    auto basis = VfBasis<B>::build(spec);
    auto text = serialize(make_code_file(spec, basis, spread_set(spec, basis)));
    if (opt.out_path.empty()) {
        std::cout << text;
        return kOk;
    }
    std::ofstream out(opt.out_path, std::ios::binary);
    if (!out || !(out << text)) {
        std::cerr << "error: cannot write " << opt.out_path << "\n";
        return kPrecondition;
    }
    std::cout << "wrote " << opt.out_path << " generators=" << spec.dim_A() << " k=" << spec.k() << "\n";
    return kOk;
}

template <class B>
void print_block(const char* name, const CodeSpec<B>& spec, const std::vector<std::vector<Elem<B>>>& basis) {
    std::cout << name << "\n  dim_Fprime=" << basis.size() << "\n";
    for (const auto& v : basis) std::cout << "  basis " << spec.ctx.ring().format(algebra_element(spec, v)) << "\n";
}

template <class B>
int cmd_check(const Instance<B>& inst, const SpecFile& file, const Options& opt, std::uint64_t budget, int jobs) {
    if (opt.what == "norm") {
        auto rep = mclm(inst.ctx, inst.f);
        std::cout << "norm_constant_check=" << (norm_constant_check(inst.ctx, rep) ? "pass" : "fail") << "\n";
        return kOk;
    }
    auto spec = code_spec(inst, file, budget);
    const auto& R = spec.ctx.ring();
    if (opt.what == "mrd") {
        MrdOptions mo;
        mo.budget = budget;
        mo.jobs = jobs;
        mo.assume_similar_in_E = file.assume_similar_in_E;
        auto cert = certify_mrd(spec, mo);
        std::cout << "mrd=" << to_string(cert.verdict) << " d="
                  << (cert.verdict == MrdVerdict::Unknown ? std::string("?") : std::to_string(cert.distance))
                  << " bound=" << cert.bound << " by=" << cert.by;
        if (cert.witness) std::cout << " witness=" << R.format(*cert.witness);
        std::cout << "\n";
        return cert.verdict == MrdVerdict::Unknown ? kUnknown : kOk;
    }
    if (opt.what == "division") {
        DivisionOptions dopt;
        dopt.budget = budget;
        dopt.assume_similar_in_E = file.assume_similar_in_E;
        auto cert = check_division(spec, dopt);
        std::cout << "division=" << to_string(cert.verdict) << " by=" << cert.by;
        if (cert.zero_divisors)
            std::cout << " b=" << R.format(cert.zero_divisors->first) << " c=" << R.format(cert.zero_divisors->second);
        std::cout << "\n";
        return cert.verdict == DivisionVerdict::Unknown ? kUnknown : kOk;
    }
    // nuclei
    auto rep = nuclei(spec);
    std::cout << "product=" << (rep.isotope ? "unital-isotope" : "direct") << "\n";
    print_block("nuc_l", spec, rep.left);
    print_block("nuc_m", spec, rep.middle);
    print_block("nuc_r", spec, rep.right);
    print_block("center", spec, rep.center);
    return kOk;
}

template <class B>
int cmd_rank(const Instance<B>& inst, const SpecFile& file, const Options& opt, std::uint64_t budget) {
    auto spec = code_spec(inst, file, budget);
    SkewPoly<B> a;
    try {
        a = spec.ctx.ring().parse(opt.element);
    } catch (const Error& e) {
        std::cerr << "error: --element: " << e.what() << "\n";
        return kParse;
    }
    auto basis = VfBasis<B>::build(spec);
    auto cert = rank_via_gcrd(spec, basis, a);
    std::cout << "rank=" << cert.gaussian_rank << " gcrd_degree=" << cert.gcrd_degree
              << " formula_rank=" << cert.formula_rank << "\n";
    return kOk;
}

template <class B>
int run(const std::string& command, const SpecFile& file, const Options& opt) {
    const std::uint64_t budget = opt.budget.value_or(file.budget);
    const int jobs = opt.jobs.value_or(file.jobs);
    try {
        auto inst = instantiate<B>(file);
        if (command == "mclm") return cmd_mclm(inst, budget);
        if (command == "norm") return cmd_norm(inst);
        if (command == "build-code") return cmd_build_code(inst, file, opt, budget);
        if (command == "check") return cmd_check(inst, file, opt, budget, jobs);
        return cmd_rank(inst, file, opt, budget);
    } catch (const Error& e) {
        std::cerr << "error: " << (e.kind() == ErrorKind::Parse ? opt.spec_path + ":" : std::string()) << e.what()
                  << "\n";
        switch (e.kind()) {
            case ErrorKind::Parse: return kParse;
            case ErrorKind::Unknown:
            case ErrorKind::BudgetExceeded: return kUnknown;
            case ErrorKind::SNotOne:
                std::cerr << "error: matrix emission unsupported for s>1\n";
                return kPrecondition;
            default: return kPrecondition;
        }
    }
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Skew polynomial codes and nonassociative algebras"};
    app.require_subcommand(1);
    Options opt;
    auto common = [&](CLI::App* sub) {
        sub->add_option("--spec", opt.spec_path, "instance file")->required();
        sub->add_option("--budget", opt.budget, "exhaustive scan budget");
        sub->add_option("--jobs", opt.jobs, "worker threads for distance scans");
    };
    common(app.add_subcommand("mclm", "minimal central left multiple and irreducibility"));
    common(app.add_subcommand("norm", "reduced norm of f"));
    auto build = app.add_subcommand("build-code", "write the spread set of the code");
    common(build);
    build->add_option("--out", opt.out_path, "output file (stdout when omitted)");
    auto check = app.add_subcommand("check", "mrd, division, nuclei or norm verdicts");
    common(check);
    check->add_option("what", opt.what, "what to check")
        ->required()
        ->check(CLI::IsMember({"mrd", "division", "nuclei", "norm"}));
    auto rank_cmd = app.add_subcommand("rank", "rank of M_a by elimination and by gcrd");
    common(rank_cmd);
    rank_cmd->add_option("--element", opt.element, "coefficients of a, constant first")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kParse;
    }
    const std::string command = app.get_subcommands().front()->get_name();

    std::ifstream in(opt.spec_path, std::ios::binary);
    if (!in) {
        std::cerr << "error: cannot read " << opt.spec_path << "\n";
        return kParse;
    }
    std::stringstream buffer;
    buffer << in.rdbuf();
    SpecFile file;
    try {
        file = parse_spec(buffer.str());
    } catch (const Error& e) {
        std::cerr << "error: " << opt.spec_path << ":" << e.what() << "\n";
        return kParse;
    }
    return file.is_rational() ? run<RationalBase>(command, file, opt) : run<PrimeBase>(command, file, opt);
}
