/*
   Copyright 2026 The cuelab authors

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

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "cuelab/charmap.hpp"
#include "cuelab/contingency.hpp"
#include "cuelab/cue.hpp"
#include "cuelab/ffield.hpp"
#include "cuelab/lfunc.hpp"
#include "cuelab/symfunc.hpp"
#include "cuelab/table.hpp"

namespace {

using namespace cuelab;

struct OutputConfig {
    std::string format = "csv";
    std::string out_path;
};

void add_output_flags(CLI::App* cmd, OutputConfig& cfg) {
    cmd->add_option("--format", cfg.format, "Output format")
        ->check(CLI::IsMember({"csv", "json"}))
        ->capture_default_str();
    cmd->add_option("--out", cfg.out_path, "Write the table to this file instead of stdout");
}

void emit(const Table& table, const OutputConfig& cfg) {
    const std::string text =
        table.render(cfg.format == "json" ? TableFormat::jsonl : TableFormat::csv);
    if (cfg.out_path.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream out(cfg.out_path, std::ios::binary);
    if (!out) throw std::invalid_argument("cannot open output file " + cfg.out_path);
    out << text;
}

std::vector<int> parse_int_list(const std::string& s, const char* what) {
    std::vector<int> out;
    std::stringstream ss(s);
    std::string item;
    while (std::getline(ss, item, ',')) {
        if (item.empty()) continue;
        try {
            out.push_back(std::stoi(item));
        } catch (const std::exception&) {
            throw std::invalid_argument(std::string(what) + ": bad integer '" + item + "'");
        }
    }
    return out;
}

struct Range {
    int lo = 1;
    int hi = 1;
};

// "4..8" or a single value "5"; an empty range (LO > HI) yields no rows
Range parse_range(const std::string& s) {
    Range r;
    const auto dots = s.find("..");
    try {
        if (dots == std::string::npos) {
            r.lo = r.hi = std::stoi(s);
        } else {
            r.lo = std::stoi(s.substr(0, dots));
            r.hi = std::stoi(s.substr(dots + 2));
        }
    } catch (const std::exception&) {
        throw std::invalid_argument("bad range '" + s + "', expected LO..HI or a single value");
    }
    return r;
}

// "1,0,1@q=2" means 1 + T^2 over F_2
FPoly parse_modulus(const std::string& s) {
    const auto at = s.find('@');
    if (at == std::string::npos || s.substr(at + 1, 2) != "q=")
        throw std::invalid_argument("bad modulus '" + s + "', expected c0,c1,...@q=SIZE");
    int q = 0;
    try {
        q = std::stoi(s.substr(at + 3));
    } catch (const std::exception&) {
        throw std::invalid_argument("bad field size in modulus '" + s + "'");
    }
    const std::vector<int> coeffs = parse_int_list(s.substr(0, at), "modulus");
    return FPoly(Field::make(q), coeffs);
}

std::string join_ints(const std::vector<int>& v, char sep = ';') {
    std::string s;
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (i > 0) s += sep;
        s += std::to_string(v[i]);
    }
    return s;
}

// ---- subcommand drivers; each returns false when an asserted equality fails ----

bool run_verify_moments(MomentKind kind, int n_max, const Range& N, const OutputConfig& cfg) {
    Table table({"n", "mu", "mu_tilde", "N", "moment", "tables", "range", "equal"});
    bool ok = true;
    for (int n = 0; n <= n_max; ++n)
        for (const Partition& mu : enumerate_partitions(n))
            for (const Partition& nu : enumerate_partitions(n)) {
                const Int target = count_matrices(mu, nu);
                for (int size = N.lo; size <= N.hi; ++size) {
                    const MomentSpec spec{mu.multiplicities(), nu.multiplicities(), size, kind};
                    const Int moment = kind == MomentKind::secular ? sc_moment_exact(spec)
                                                                   : trsym_moment_exact(spec);
                    const RangeVerdict verdict = range_verdict(spec);
                    const bool equal = moment == target;
                    if (verdict != RangeVerdict::out_of_range && !equal) ok = false;
                    table.add_row({std::to_string(n), mu.to_string(), nu.to_string(),
                                   std::to_string(size), to_string(moment), to_string(target),
                                   to_string(verdict), equal ? "true" : "false"});
                }
            }
    emit(table, cfg);
    return ok;
}

bool run_verify_kostka(int n_max, const OutputConfig& cfg) {
    Table table(
        {"n", "mu", "mu_tilde", "tables", "kostka_sum", "sn_average", "symmetric", "equal"});
    bool ok = true;
    for (int n = 0; n <= n_max; ++n)
        for (const Partition& mu : enumerate_partitions(n))
            for (const Partition& nu : enumerate_partitions(n)) {
                const Int direct = count_matrices(mu, nu);
                const Int via_kostka = count_via_kostka(mu, nu);
                const Int via_avg = count_via_sn_average(mu, nu);
                const bool symmetric = direct == count_matrices(nu, mu);
                const bool equal = direct == via_kostka && direct == via_avg;
                if (!equal || !symmetric) ok = false;
                table.add_row({std::to_string(n), mu.to_string(), nu.to_string(),
                               to_string(direct), to_string(via_kostka), to_string(via_avg),
                               symmetric ? "true" : "false", equal ? "true" : "false"});
            }
    emit(table, cfg);
    return ok;
}

bool run_ff_scan(const std::vector<int>& mu_parts, const std::vector<int>& nu_parts,
                 const std::vector<int>& primes, int holdout, const OutputConfig& cfg) {
    const Partition mu(mu_parts), nu(nu_parts);
    if (mu.size() != nu.size())
        throw std::invalid_argument("ff-scan: margins must have equal totals");
    const int n = mu.size();
    const PolyFitReport fit = polynomiality_check(mu, nu, n, primes, holdout);
    Table table({"mu", "mu_tilde", "n", "primes", "holdout", "coeffs", "leading_target",
                 "integer_coeffs", "degree_ok", "leading_ok", "holdout_ok", "verdict"});
    std::string coeffs;
    for (std::size_t i = 0; i < fit.coeffs.size(); ++i) {
        if (i > 0) coeffs += ';';
        coeffs += to_string(fit.coeffs[i]);
    }
    table.add_row({mu.to_string(), nu.to_string(), std::to_string(n), join_ints(primes),
                   std::to_string(holdout), coeffs, to_string(fit.leading_target),
                   fit.integer_coeffs ? "true" : "false", fit.degree_matches ? "true" : "false",
                   fit.leading_matches ? "true" : "false", fit.holdout_matches ? "true" : "false",
                   fit.verdict() ? "true" : "false"});
    emit(table, cfg);
    return fit.verdict();
}

bool run_char_moments(const FPoly& Q, int n, int k, const std::string& twist_name,
                      const OutputConfig& cfg) {
    const Twist twist = twist_name == "moebius" ? Twist::moebius : Twist::none;
    const UnitGroupPtr G = build_unit_group(Q);
    const Rat moment = char_moment(*G, n, k, twist);
    const Int solutions = solution_count(
        n, k, Q, twist == Twist::moebius ? TupleConstraint::squarefree : TupleConstraint::none);
    const bool in_range = n * k <= Q.degree();
    const bool equal = moment == Rat(solutions);
    const Partition margins(std::vector<int>(static_cast<std::size_t>(k), n));
    const Int tables = count_matrices(margins, margins);
    const Rat ratio = moment / Rat(int_pow(Int(G->field()->q()), n * k) * tables);

    Table table({"q", "Q", "n", "k", "twist", "moment", "solution_count", "in_identity_range",
                 "equal", "tables", "ratio_to_qnk_tables"});
    table.add_row({std::to_string(G->field()->q()), Q.to_string(), std::to_string(n),
                   std::to_string(k), twist_name, to_string(moment), to_string(solutions),
                   in_range ? "true" : "false", equal ? "true" : "false", to_string(tables),
                   format_double(ratio.get_d())});
    emit(table, cfg);
    return !in_range || equal;
}

bool run_theta(const FPoly& Q, const OutputConfig& cfg) {
    const UnitGroupPtr G = build_unit_group(Q);
    Table table({"q", "Q", "chi", "l_degree", "degree_ok", "max_root_err", "roots_ok",
                 "max_sc_err", "sc_ok", "max_trsym_err", "trsym_ok", "weil_ok", "pass"});
    bool ok = true;
    for (const Character& chi : characters(G)) {
        if (!chi.is_odd() || !chi.is_primitive()) continue;
        const ThetaReport rep = theta_checks(chi);
        if (!rep.all_ok()) ok = false;
        table.add_row({std::to_string(G->field()->q()), Q.to_string(),
                       join_ints(chi.exponents()), std::to_string(rep.l_degree),
                       rep.degree_ok ? "true" : "false",
                       format_double(rep.max_root_modulus_error),
                       rep.roots_ok ? "true" : "false", format_double(rep.max_sc_error),
                       rep.sc_ok ? "true" : "false", format_double(rep.max_trsym_error),
                       rep.trsym_ok ? "true" : "false", rep.weil_ok ? "true" : "false",
                       rep.all_ok() ? "true" : "false"});
    }
    emit(table, cfg);
    return ok;
}

bool run_mc(const std::string& kind_name, const std::vector<int>& a, const std::vector<int>& b,
            int N, int samples, std::uint64_t seed, const OutputConfig& cfg) {
    const MomentKind kind =
        kind_name == "symmetric-power" ? MomentKind::symmetric_power : MomentKind::secular;
    const MomentSpec spec{a, b, N, kind};
    const Int exact =
        kind == MomentKind::secular ? sc_moment_exact(spec) : trsym_moment_exact(spec);
    const McEstimate est = mc_moment_estimate(spec, samples, seed);
    const double z = est.stderr_est > 0.0
                         ? std::abs(est.estimate - Complex(exact.get_d(), 0.0)) / est.stderr_est
                         : 0.0;
    Table table({"kind", "a", "b", "N", "samples", "seed", "estimate_re", "estimate_im", "stderr",
                 "exact", "range", "z"});
    table.add_row({kind_name, join_ints(a), join_ints(b), std::to_string(N),
                   std::to_string(samples), std::to_string(seed),
                   format_double(est.estimate.real()), format_double(est.estimate.imag()),
                   format_double(est.stderr_est), to_string(exact),
                   to_string(range_verdict(spec)), format_double(z)});
    emit(table, cfg);
    return true;
}

bool run_katz_trend(int d, int n, int k, const std::vector<int>& primes,
                    const OutputConfig& cfg) {
    Table table({"q", "Q", "n", "k", "moment_none", "moment_moebius", "ratio_none",
                 "ratio_moebius", "tables"});
    for (const KatzRow& row : katz_trend_report(d, n, k, primes))
        table.add_row({std::to_string(row.q), row.modulus, std::to_string(n), std::to_string(k),
                       to_string(row.moment_none), to_string(row.moment_moebius),
                       format_double(row.ratio_none.get_d()),
                       format_double(row.ratio_moebius.get_d()), to_string(row.target)});
    emit(table, cfg);
    return true;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{
        "cuelab: exact verification tables for CUE secular-coefficient and symmetric-power\n"
        "moments, contingency-table identities, and their function-field analogues.\n"
        "The CUE_LAB_MAX_ENUM environment variable caps enumeration sizes."};
    app.require_subcommand(1);

    int exit_status = 0;
    const auto record = [&exit_status](bool ok) {
        if (!ok) exit_status = 1;
    };

    {
        auto* cmd =
            app.add_subcommand("verify-dg", "Secular-coefficient moments vs contingency counts");
        auto n_max = std::make_shared<int>(4);
        auto n_range = std::make_shared<std::string>("1..6");
        auto cfg = std::make_shared<OutputConfig>();
        cmd->add_option("--n-max", *n_max, "Largest degree n")->capture_default_str();
        cmd->add_option("--N", *n_range, "Matrix sizes, LO..HI or a single value")
            ->capture_default_str();
        add_output_flags(cmd, *cfg);
        cmd->callback([=]() {
            record(run_verify_moments(MomentKind::secular, *n_max, parse_range(*n_range), *cfg));
        });
    }

    {
        auto* cmd = app.add_subcommand("verify-trsym",
                                       "Symmetric-power trace moments vs contingency counts");
        auto n_max = std::make_shared<int>(4);
        auto n_range = std::make_shared<std::string>("1..6");
        auto cfg = std::make_shared<OutputConfig>();
        cmd->add_option("--n-max", *n_max, "Largest degree n")->capture_default_str();
        cmd->add_option("--N", *n_range, "Matrix sizes, LO..HI or a single value")
            ->capture_default_str();
        add_output_flags(cmd, *cfg);
        cmd->callback([=]() {
            record(run_verify_moments(MomentKind::symmetric_power, *n_max, parse_range(*n_range),
                                      *cfg));
        });
    }

    {
        auto* cmd = app.add_subcommand(
            "verify-kostka", "Three-way contingency count agreement (backtracking, Kostka, S_n)");
        auto n_max = std::make_shared<int>(5);
        auto cfg = std::make_shared<OutputConfig>();
        cmd->add_option("--n-max", *n_max, "Largest margin total n")->capture_default_str();
        add_output_flags(cmd, *cfg);
        cmd->callback([=]() { record(run_verify_kostka(*n_max, *cfg)); });
    }

    {
        auto* cmd = app.add_subcommand(
            "ff-scan", "Fit the divisor correlation sum as a polynomial in q and verify it");
        auto mu = std::make_shared<std::string>("1,1");
        auto nu = std::make_shared<std::string>("1,1");
        auto primes = std::make_shared<std::string>("2,3,5");
        auto holdout = std::make_shared<int>(7);
        auto cfg = std::make_shared<OutputConfig>();
        cmd->add_option("--mu", *mu, "Row margin partition, comma separated")
            ->capture_default_str();
        cmd->add_option("--mu-tilde", *nu, "Column margin partition")->capture_default_str();
        cmd->add_option("--primes", *primes, "Field sizes used for the fit")
            ->capture_default_str();
        cmd->add_option("--holdout", *holdout, "Field size reserved for the exact check")
            ->capture_default_str();
        add_output_flags(cmd, *cfg);
        cmd->callback([=]() {
            record(run_ff_scan(parse_int_list(*mu, "--mu"), parse_int_list(*nu, "--mu-tilde"),
                               parse_int_list(*primes, "--primes"), *holdout, *cfg));
        });
    }

    {
        auto* cmd = app.add_subcommand("char-moments",
                                       "Character-sum moment vs product-tuple solution count");
        auto q_str = std::make_shared<std::string>("0,0,1@q=3");
        auto n = std::make_shared<int>(1);
        auto k = std::make_shared<int>(1);
        auto twist = std::make_shared<std::string>("none");
        auto cfg = std::make_shared<OutputConfig>();
        cmd->add_option("--Q", *q_str, "Modulus as c0,c1,...@q=SIZE")->capture_default_str();
        cmd->add_option("--n", *n, "Degree of the summed monics")->capture_default_str();
        cmd->add_option("--k", *k, "Half the moment order (|.|^{2k})")->capture_default_str();
        cmd->add_option("--twist", *twist, "Twist applied inside the character sum")
            ->check(CLI::IsMember({"none", "moebius"}))
            ->capture_default_str();
        add_output_flags(cmd, *cfg);
        cmd->callback(
            [=]() { record(run_char_moments(parse_modulus(*q_str), *n, *k, *twist, *cfg)); });
    }

    {
        auto* cmd = app.add_subcommand(
            "theta", "Unitarized Frobenius checks for every odd primitive character mod Q");
        auto q_str = std::make_shared<std::string>("1,0,1@q=3");
        auto cfg = std::make_shared<OutputConfig>();
        cmd->add_option("--Q", *q_str, "Modulus as c0,c1,...@q=SIZE")->capture_default_str();
        add_output_flags(cmd, *cfg);
        cmd->callback([=]() { record(run_theta(parse_modulus(*q_str), *cfg)); });
    }

    {
        auto* cmd = app.add_subcommand("mc", "Monte Carlo estimate of a moment spec");
        auto kind = std::make_shared<std::string>("secular");
        auto a = std::make_shared<std::string>("1");
        auto b = std::make_shared<std::string>("1");
        auto N = std::make_shared<int>(2);
        auto samples = std::make_shared<int>(100000);
        auto seed = std::make_shared<std::uint64_t>(1);
        auto cfg = std::make_shared<OutputConfig>();
        cmd->add_option("--kind", *kind, "Integrand family")
            ->check(CLI::IsMember({"secular", "symmetric-power"}))
            ->capture_default_str();
        cmd->add_option("--a", *a, "Multiplicities a_j, comma separated")->capture_default_str();
        cmd->add_option("--b", *b, "Multiplicities b_j")->capture_default_str();
        cmd->add_option("--N", *N, "Matrix size")->capture_default_str();
        cmd->add_option("--samples", *samples, "Haar samples")->capture_default_str();
        cmd->add_option("--seed", *seed, "RNG seed; output is a pure function of the seed")
            ->capture_default_str();
        add_output_flags(cmd, *cfg);
        cmd->callback([=]() {
            record(run_mc(*kind, parse_int_list(*a, "--a"), parse_int_list(*b, "--b"), *N,
                          *samples, *seed, *cfg));
        });
    }

    {
        auto* cmd = app.add_subcommand(
            "katz-trend", "Report-only large-q trend of character moments toward the CUE value");
        auto d = std::make_shared<int>(2);
        auto n = std::make_shared<int>(1);
        auto k = std::make_shared<int>(2);
        auto primes = std::make_shared<std::string>("2,3,5,7");
        auto cfg = std::make_shared<OutputConfig>();
        cmd->add_option("--d", *d, "Modulus degree (first squarefree monic is used)")
            ->capture_default_str();
        cmd->add_option("--n", *n, "Degree of the summed monics")->capture_default_str();
        cmd->add_option("--k", *k, "Half the moment order")->capture_default_str();
        cmd->add_option("--primes", *primes, "Field sizes")->capture_default_str();
        add_output_flags(cmd, *cfg);
        cmd->callback(
            [=]() { record(run_katz_trend(*d, *n, *k, parse_int_list(*primes, "--primes"), *cfg)); });
    }

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int rc = app.exit(e);
        return rc == 0 ? 0 : 2;
    } catch (const bound_error& e) {
        std::cerr << "resource bound exceeded: " << e.what() << "\n";
        return 3;
    } catch (const std::invalid_argument& e) {
        std::cerr << "usage error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return exit_status;
}
