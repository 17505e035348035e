// Command-line front end: exact Johnson-graph spectra, bound verification,
// batch scans and bond-percolation experiments.
//
// All exact values are printed as lossless decimal strings (rationals as
// "num/den"); 12-significant-digit decimal approximations are labeled as
// such. Timing goes to stderr so stdout stays byte-reproducible.

#include <chrono>
#include <cstdio>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "jg/oracle.hpp"
#include "jg/percolation.hpp"
#include "jg/spectrum.hpp"

using jg::BigInt;
using jg::BigRat;
using jg::GraphParams;
using nlohmann::json;

namespace {

enum class Format { human, json_lines, csv };

struct CommonOpts {
    bool as_json = false;
    bool as_csv = false;
    Format format() const {
        if (as_json) return Format::json_lines;
        if (as_csv) return Format::csv;
        return Format::human;
    }
};

void add_format_flags(CLI::App* cmd, CommonOpts& opts) {
    auto* j = cmd->add_flag("--json", opts.as_json,
                            "emit JSON lines (one object per record)");
    cmd->add_flag("--csv", opts.as_csv, "emit CSV rows")->excludes(j);
}

std::string rat_str(const BigRat& q) { return q.get_str(); }

// 12 significant digits, computed in 256-bit floats so huge rationals
// do not overflow on the way out.
std::string rat_decimal(const BigRat& q) {
    mpf_class f(q, 256);
    std::ostringstream os;
    os << std::setprecision(12) << f;
    return os.str();
}

std::string fixed6(double x) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.6f", x);
    return buf;
}

std::string sig12(double x) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.12g", x);
    return buf;
}

// Accepts "7", "-3/4" and plain decimals like "0.5".
BigRat parse_rational(const std::string& text) {
    const auto bad = [&]() {
        return std::invalid_argument("cannot parse rational '" + text + "'");
    };
    if (text.empty()) throw bad();
    const auto slash = text.find('/');
    if (slash != std::string::npos) {
        BigInt num, den;
        if (num.set_str(text.substr(0, slash), 10) != 0) throw bad();
        if (den.set_str(text.substr(slash + 1), 10) != 0) throw bad();
        return jg::make_rat(num, den);
    }
    const auto dot = text.find('.');
    if (dot == std::string::npos) {
        BigInt num;
        if (num.set_str(text, 10) != 0) throw bad();
        return BigRat(num);
    }
    std::string digits = text.substr(0, dot) + text.substr(dot + 1);
    if (digits.empty() || digits == "-" || digits == "+") throw bad();
    BigInt num;
    if (num.set_str(digits, 10) != 0) throw bad();
    BigInt den;
    mpz_ui_pow_ui(den.get_mpz_t(), 10,
                  static_cast<unsigned long>(text.size() - dot - 1));
    return jg::make_rat(num, den);
}

json params_json(const GraphParams& p) {
    return json{{"n", p.n}, {"r", p.r}, {"s", p.s}};
}

struct Stopwatch {
    std::chrono::steady_clock::time_point start =
        std::chrono::steady_clock::now();
    double ms() const {
        return std::chrono::duration<double, std::milli>(
                   std::chrono::steady_clock::now() - start)
            .count();
    }
};

void report_time(const char* command, const Stopwatch& sw) {
    std::fprintf(stderr, "# time_ms=%.3f command=%s\n", sw.ms(), command);
}

// ---------------------------------------------------------------- spectrum

int run_spectrum(const GraphParams& given, bool merged, Format fmt) {
    Stopwatch sw;
    if (given.degenerate()) {
        const BigInt n_vertices = jg::binom(given.n, given.r);
        if (fmt == Format::json_lines) {
            json rec{{"command", "spectrum"},
                     {"params", params_json(given)},
                     {"degenerate", true},
                     {"vertices", n_vertices.get_str()},
                     {"degree", "0"},
                     {"lambda", "0"}};
            std::cout << rec.dump() << '\n';
        } else if (fmt == Format::csv) {
            std::cout << "i,eigenvalue,multiplicity\n";
        } else {
            std::cout << "spectrum G" << given.str() << '\n'
                      << "  degenerate   true (edgeless: 2r - s > n; every "
                         "pair of r-sets meets in more than s elements)\n"
                      << "  vertices     " << n_vertices.get_str() << '\n'
                      << "  degree       0\n"
                      << "  lambda       0\n";
        }
        report_time("spectrum", sw);
        return 0;
    }

    const auto sp = jg::full_spectrum(given);
    if (fmt == Format::json_lines) {
        json entries = json::array();
        for (const auto& e : sp.entries)
            entries.push_back(json{{"i", e.index},
                                   {"value", e.value.get_str()},
                                   {"multiplicity", e.multiplicity.get_str()}});
        json rec{{"command", "spectrum"},
                 {"params", params_json(given)},
                 {"canonical", params_json(sp.params)},
                 {"degenerate", false},
                 {"vertices", sp.vertex_count().get_str()},
                 {"degree", sp.degree.get_str()},
                 {"lambda", sp.lambda.get_str()},
                 {"argmax_i", sp.argmax_index},
                 {"entries", entries}};
        if (merged) {
            json m = json::array();
            for (const auto& [value, mult] : sp.merged())
                m.push_back(json{{"value", value.get_str()},
                                 {"multiplicity", mult.get_str()}});
            rec["merged"] = m;
        }
        std::cout << rec.dump() << '\n';
    } else if (fmt == Format::csv) {
        std::cout << "i,eigenvalue,multiplicity\n";
        for (const auto& e : sp.entries)
            std::cout << e.index << ',' << e.value.get_str() << ','
                      << e.multiplicity.get_str() << '\n';
    } else {
        std::cout << "spectrum G" << given.str() << '\n';
        if (!(sp.params == given))
            std::cout << "  canonical    G" << sp.params.str() << '\n';
        std::cout << "  vertices     " << sp.vertex_count().get_str() << '\n'
                  << "  degree       " << sp.degree.get_str() << '\n'
                  << "  lambda       " << sp.lambda.get_str() << '\n'
                  << "  argmax_i     " << sp.argmax_index << '\n';
        std::size_t wv = 4, wm = 4;
        for (const auto& e : sp.entries) {
            wv = std::max(wv, e.value.get_str().size());
            wm = std::max(wm, e.multiplicity.get_str().size());
        }
        std::cout << "  " << std::setw(4) << "i" << ' ' << std::setw((int)wv)
                  << "E(i)" << ' ' << std::setw((int)wm) << "mult" << '\n';
        for (const auto& e : sp.entries)
            std::cout << "  " << std::setw(4) << e.index << ' '
                      << std::setw((int)wv) << e.value.get_str() << ' '
                      << std::setw((int)wm) << e.multiplicity.get_str()
                      << '\n';
        if (merged) {
            std::cout << "  distinct eigenvalues:\n";
            for (const auto& [value, mult] : sp.merged())
                std::cout << "    " << value.get_str() << " x "
                          << mult.get_str() << '\n';
        }
    }
    report_time("spectrum", sw);
    return 0;
}

// ------------------------------------------------------------------ verify

json bound_report_json(const jg::BoundReport& rep) {
    json rec{{"theorem", jg::theorem_name(rep.theorem)},
             {"params", params_json(rep.params)},
             {"canonical", params_json(rep.canon)},
             {"degenerate", rep.degenerate},
             {"applicable", rep.applicable},
             {"lambda", rep.lambda.get_str()},
             {"argmax_i", rep.argmax_index}};
    rec["predicted"] =
        rep.predicted ? json(rat_str(*rep.predicted)) : json(nullptr);
    rec["predicted_decimal"] =
        rep.predicted ? json(rat_decimal(*rep.predicted)) : json(nullptr);
    rec["ratio"] = rep.ratio ? json(rat_str(*rep.ratio)) : json(nullptr);
    rec["ratio_decimal"] =
        rep.ratio ? json(rat_decimal(*rep.ratio)) : json(nullptr);
    rec["claim_holds"] =
        rep.claim_holds ? json(*rep.claim_holds) : json(nullptr);
    if (rep.alpha) rec["alpha"] = rat_str(*rep.alpha);
    if (rep.f_r) rec["f_r"] = rat_str(*rep.f_r);
    if (rep.f_s) rec["f_s"] = rat_str(*rep.f_s);
    rec["error"] = rep.error.empty() ? json(nullptr) : json(rep.error);
    return rec;
}

void print_bound_report_human(const jg::BoundReport& rep) {
    std::cout << "verify G" << rep.params.str()
              << " theorem=" << jg::theorem_name(rep.theorem) << '\n';
    if (!(rep.canon == rep.params))
        std::cout << "  canonical    G" << rep.canon.str() << '\n';
    if (rep.degenerate) {
        std::cout << "  degenerate   true (edgeless)\n"
                  << "  applicable   false\n"
                  << "  lambda       0\n";
        return;
    }
    std::cout << "  applicable   " << (rep.applicable ? "true" : "false")
              << '\n'
              << "  lambda       " << rep.lambda.get_str() << "  (argmax i = "
              << rep.argmax_index << ")\n";
    if (rep.alpha)
        std::cout << "  alpha        " << rat_str(*rep.alpha) << '\n';
    if (rep.f_r && rep.f_s)
        std::cout << "  f_r          " << rat_str(*rep.f_r) << '\n'
                  << "  f_s          " << rat_str(*rep.f_s) << '\n';
    if (rep.predicted)
        std::cout << "  predicted    " << rat_str(*rep.predicted) << "  (~ "
                  << rat_decimal(*rep.predicted) << ")\n";
    if (rep.ratio)
        std::cout << "  ratio        " << rat_str(*rep.ratio) << "  (~ "
                  << rat_decimal(*rep.ratio) << ")\n";
    if (rep.claim_holds)
        std::cout << "  claim        "
                  << (*rep.claim_holds ? "holds" : "VIOLATED") << '\n';
}

int run_verify_theorem(const GraphParams& p, jg::Theorem t,
                       std::optional<BigRat> alpha, Format fmt) {
    Stopwatch sw;
    const auto rep = jg::verify_bound(p, t, alpha);
    if (fmt == Format::json_lines) {
        json rec = bound_report_json(rep);
        rec["command"] = "verify";
        std::cout << rec.dump() << '\n';
    } else if (fmt == Format::csv) {
        std::cout << "theorem,n,r,s,applicable,degenerate,lambda,argmax_i,"
                     "predicted,ratio,ratio_decimal,claim_holds\n";
        std::cout << jg::theorem_name(rep.theorem) << ',' << rep.params.n
                  << ',' << rep.params.r << ',' << rep.params.s << ','
                  << (rep.applicable ? "true" : "false") << ','
                  << (rep.degenerate ? "true" : "false") << ','
                  << rep.lambda.get_str() << ',' << rep.argmax_index << ','
                  << (rep.predicted ? rat_str(*rep.predicted) : "") << ','
                  << (rep.ratio ? rat_str(*rep.ratio) : "") << ','
                  << (rep.ratio ? rat_decimal(*rep.ratio) : "") << ','
                  << (rep.claim_holds ? (*rep.claim_holds ? "true" : "false")
                                      : "")
                  << '\n';
    } else {
        print_bound_report_human(rep);
    }
    report_time("verify", sw);
    return 0;
}

int run_verify_oracle(const GraphParams& p, long K, std::size_t cap,
                      Format fmt) {
    Stopwatch sw;
    jg::BuildLimits limits;
    limits.max_vertices = cap;
    if (K < 0) K = 2 * jg::canonicalize(p).r + 1;
    const auto res = jg::spectrum_consistency(p, K, limits);
    if (fmt == Format::json_lines) {
        json fm = json::array(), gm = json::array();
        for (const auto& m : res.formula_moments) fm.push_back(m.get_str());
        for (const auto& m : res.graph_moments) gm.push_back(m.get_str());
        json rec{{"command", "verify"},
                 {"theorem", "oracle"},
                 {"params", params_json(p)},
                 {"K", K},
                 {"consistent", res.ok},
                 {"first_failing_k",
                  res.ok ? json(nullptr) : json(res.first_failing_k)},
                 {"formula_moments", fm},
                 {"graph_moments", gm}};
        std::cout << rec.dump() << '\n';
    } else if (fmt == Format::csv) {
        std::cout << "k,formula_moment,graph_moment,match\n";
        for (std::size_t k = 0; k < res.formula_moments.size(); ++k)
            std::cout << k << ',' << res.formula_moments[k].get_str() << ','
                      << res.graph_moments[k].get_str() << ','
                      << (res.formula_moments[k] == res.graph_moments[k]
                              ? "true"
                              : "false")
                      << '\n';
    } else {
        std::cout << "verify G" << p.str() << " theorem=oracle K=" << K
                  << '\n'
                  << "  consistent   " << (res.ok ? "true" : "false") << '\n';
        if (!res.ok)
            std::cout << "  first_fail_k " << res.first_failing_k << '\n';
        std::cout << "  k  sum_i mult_i E(i)^k  (= tr(A^k))\n";
        for (std::size_t k = 0; k < res.formula_moments.size(); ++k)
            std::cout << "  " << k << "  " << res.formula_moments[k].get_str()
                      << (res.formula_moments[k] == res.graph_moments[k]
                              ? ""
                              : "  != " + res.graph_moments[k].get_str())
                      << '\n';
    }
    report_time("verify", sw);
    return res.ok ? 0 : 1;
}

int run_verify_recurrence(const GraphParams& given, Format fmt) {
    Stopwatch sw;
    const GraphParams p = jg::canonicalize(given);
    long points = 0;
    long nonzero = 0;
    BigRat max_abs(0);
    for (long i = 1; i <= p.r; ++i)
        for (long j = 0; j <= i; ++j) {
            const BigRat res = jg::eberlein_recurrence_residual(p, i, j);
            ++points;
            if (res != 0) {
                ++nonzero;
                const BigRat a = abs(res);
                if (a > max_abs) max_abs = a;
            }
        }
    if (fmt == Format::json_lines) {
        json rec{{"command", "verify"},       {"theorem", "lemma6"},
                 {"params", params_json(given)}, {"canonical", params_json(p)},
                 {"points", points},          {"all_zero", nonzero == 0},
                 {"nonzero_points", nonzero},
                 {"max_abs_residual", rat_str(max_abs)}};
        std::cout << rec.dump() << '\n';
    } else if (fmt == Format::csv) {
        std::cout << "points,all_zero,nonzero_points,max_abs_residual\n"
                  << points << ',' << (nonzero == 0 ? "true" : "false") << ','
                  << nonzero << ',' << rat_str(max_abs) << '\n';
    } else {
        std::cout << "verify G" << given.str() << " theorem=lemma6\n"
                  << "  domain       1 <= i <= r, 0 <= j <= i  (" << points
                  << " points on G" << p.str() << ")\n"
                  << "  all zero     " << (nonzero == 0 ? "true" : "false")
                  << '\n';
        if (nonzero != 0)
            std::cout << "  nonzero      " << nonzero
                      << "  max |residual| = " << rat_str(max_abs) << '\n';
    }
    report_time("verify", sw);
    return nonzero == 0 ? 0 : 1;
}

// -------------------------------------------------------------------- scan

struct CsvRow {
    long line_no = 0;
    GraphParams params;
    std::string error;
};

std::vector<CsvRow> read_params_csv(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open input file: " + path);
    std::string line;
    if (!std::getline(in, line))
        throw std::runtime_error("empty input file: " + path);
    auto strip = [](std::string t) {
        t.erase(0, t.find_first_not_of(" \t\r"));
        t.erase(t.find_last_not_of(" \t\r") + 1);
        return t;
    };
    if (strip(line) != "n,r,s")
        throw std::runtime_error("input must start with the header 'n,r,s'");
    std::vector<CsvRow> rows;
    long line_no = 1;
    while (std::getline(in, line)) {
        ++line_no;
        if (strip(line).empty()) continue;
        CsvRow row;
        row.line_no = line_no;
        std::istringstream ss(line);
        std::string field;
        long vals[3];
        bool ok = true;
        for (int f = 0; f < 3 && ok; ++f) {
            if (!std::getline(ss, field, ',')) {
                ok = false;
                break;
            }
            try {
                std::size_t used = 0;
                vals[f] = std::stol(strip(field), &used);
                if (used != strip(field).size()) ok = false;
            } catch (const std::exception&) {
                ok = false;
            }
        }
        std::string extra;
        if (ok && std::getline(ss, extra, ',') && !strip(extra).empty())
            ok = false;
        if (!ok) {
            row.error = "malformed row: '" + line + "'";
        } else {
            row.params = GraphParams{vals[0], vals[1], vals[2]};
        }
        rows.push_back(row);
    }
    return rows;
}

int run_scan(const std::string& input, jg::Theorem t,
             std::optional<BigRat> alpha, Format fmt) {
    Stopwatch sw;
    const auto rows = read_params_csv(input);
    std::vector<jg::ScanItem> items;
    std::vector<std::size_t> item_row;  // row index per scan item
    for (std::size_t idx = 0; idx < rows.size(); ++idx) {
        if (!rows[idx].error.empty()) continue;
        items.push_back({rows[idx].params, alpha});
        item_row.push_back(idx);
    }
    auto scan = jg::scan_bounds(items, t);
    bool any_error = scan.any_error;

    // stitch malformed-row errors back into output order
    std::vector<const jg::BoundReport*> by_row(rows.size(), nullptr);
    for (std::size_t k = 0; k < item_row.size(); ++k)
        by_row[item_row[k]] = &scan.reports[k];

    if (fmt == Format::csv)
        std::cout << "row,n,r,s,applicable,degenerate,lambda,argmax_i,"
                     "predicted,ratio,ratio_decimal,claim_holds,error\n";
    for (std::size_t idx = 0; idx < rows.size(); ++idx) {
        const long row_no = static_cast<long>(idx) + 1;
        if (!rows[idx].error.empty()) {
            any_error = true;
            if (fmt == Format::json_lines) {
                json rec{{"row", row_no}, {"error", rows[idx].error}};
                std::cout << rec.dump() << '\n';
            } else if (fmt == Format::csv) {
                std::cout << row_no << ",,,,,,,,,,,,\"" << rows[idx].error
                          << "\"\n";
            } else {
                std::cout << "row " << row_no << "  ERROR " << rows[idx].error
                          << '\n';
            }
            continue;
        }
        const auto& rep = *by_row[idx];
        if (!rep.error.empty()) any_error = true;
        if (fmt == Format::json_lines) {
            json rec = bound_report_json(rep);
            rec["row"] = row_no;
            std::cout << rec.dump() << '\n';
        } else if (fmt == Format::csv) {
            std::cout << row_no << ',' << rep.params.n << ',' << rep.params.r
                      << ',' << rep.params.s << ','
                      << (rep.applicable ? "true" : "false") << ','
                      << (rep.degenerate ? "true" : "false") << ','
                      << rep.lambda.get_str() << ',' << rep.argmax_index << ','
                      << (rep.predicted ? rat_str(*rep.predicted) : "") << ','
                      << (rep.ratio ? rat_str(*rep.ratio) : "") << ','
                      << (rep.ratio ? rat_decimal(*rep.ratio) : "") << ','
                      << (rep.claim_holds
                              ? (*rep.claim_holds ? "true" : "false")
                              : "")
                      << ',' << (rep.error.empty() ? "" : '"' + rep.error + '"')
                      << '\n';
        } else {
            std::cout << "row " << row_no << "  G" << rep.params.str();
            if (!rep.error.empty()) {
                std::cout << "  ERROR " << rep.error << '\n';
                continue;
            }
            std::cout << "  applicable=" << (rep.applicable ? "true" : "false")
                      << " lambda=" << rep.lambda.get_str();
            if (rep.ratio)
                std::cout << " ratio=" << rat_str(*rep.ratio) << " (~ "
                          << rat_decimal(*rep.ratio) << ")";
            if (rep.claim_holds)
                std::cout << " claim="
                          << (*rep.claim_holds ? "holds" : "VIOLATED");
            std::cout << '\n';
        }
    }

    // summary: max ratio and, for claim-bearing theorems, the least row from
    // which the claim holds for every later item
    long threshold_row = -1;
    if (scan.threshold_index >= 0)
        threshold_row =
            static_cast<long>(item_row[static_cast<std::size_t>(
                scan.threshold_index)]) +
            1;
    long max_ratio_row = -1;
    if (scan.max_ratio_index >= 0)
        max_ratio_row =
            static_cast<long>(
                item_row[static_cast<std::size_t>(scan.max_ratio_index)]) +
            1;
    if (fmt == Format::json_lines) {
        json rec{{"summary", true},
                 {"rows", rows.size()},
                 {"theorem", jg::theorem_name(t)},
                 {"errors", any_error},
                 {"max_ratio",
                  scan.max_ratio ? json(rat_str(*scan.max_ratio)) : json(nullptr)},
                 {"max_ratio_decimal",
                  scan.max_ratio ? json(rat_decimal(*scan.max_ratio))
                                 : json(nullptr)},
                 {"max_ratio_row", max_ratio_row},
                 {"threshold_row", threshold_row}};
        if (threshold_row > 0)
            rec["threshold_params"] =
                params_json(rows[static_cast<std::size_t>(threshold_row - 1)]
                                .params);
        std::cout << rec.dump() << '\n';
    } else if (fmt == Format::csv) {
        std::cout << "# summary rows=" << rows.size()
                  << " errors=" << (any_error ? "yes" : "no") << " max_ratio="
                  << (scan.max_ratio ? rat_str(*scan.max_ratio) : "n/a")
                  << " threshold_row=" << threshold_row << '\n';
    } else {
        std::cout << "summary rows=" << rows.size()
                  << " errors=" << (any_error ? "yes" : "no");
        if (scan.max_ratio)
            std::cout << " max_ratio=" << rat_str(*scan.max_ratio) << " (~ "
                      << rat_decimal(*scan.max_ratio) << ") at row "
                      << max_ratio_row;
        if (threshold_row > 0)
            std::cout << " claim_holds_from_row=" << threshold_row << " (G"
                      << rows[static_cast<std::size_t>(threshold_row - 1)]
                             .params.str()
                      << " on)";
        else if (scan.threshold_index == -1)
            std::cout << " claim_holds_from_row=never";
        std::cout << '\n';
    }
    report_time("scan", sw);
    return any_error ? 1 : 0;
}

// --------------------------------------------------------------- percolate

void print_percolation_summary(const jg::PercolationSummary& sum, Format fmt,
                               bool header_done) {
    if (fmt == Format::json_lines) {
        json largest = json::array(), second = json::array();
        for (const auto& t : sum.trials) {
            largest.push_back(t.largest);
            second.push_back(t.second);
        }
        json rec{{"command", "percolate"},
                 {"params", params_json(sum.params)},
                 {"c", rat_str(sum.c)},
                 {"p", sum.p},
                 {"N", sum.vertex_count},
                 {"trials", sum.trials.size()},
                 {"seed", sum.seed},
                 {"largest", largest},
                 {"second", second},
                 {"mean_largest_fraction", sum.mean_largest_fraction},
                 {"stddev_largest_fraction", sum.stddev_largest_fraction},
                 {"predicted_fraction", sum.predicted_fraction}};
        std::cout << rec.dump() << '\n';
        return;
    }
    if (fmt == Format::csv) {
        if (!header_done)
            std::cout << "c,p,N,trials,seed,mean_largest_fraction,"
                         "stddev_largest_fraction,predicted_fraction,"
                         "largest,second\n";
        std::cout << rat_str(sum.c) << ',' << fixed6(sum.p) << ','
                  << sum.vertex_count << ',' << sum.trials.size() << ','
                  << sum.seed << ',' << fixed6(sum.mean_largest_fraction)
                  << ',' << fixed6(sum.stddev_largest_fraction) << ','
                  << sig12(sum.predicted_fraction) << ',';
        for (std::size_t i = 0; i < sum.trials.size(); ++i)
            std::cout << (i ? ";" : "") << sum.trials[i].largest;
        std::cout << ',';
        for (std::size_t i = 0; i < sum.trials.size(); ++i)
            std::cout << (i ? ";" : "") << sum.trials[i].second;
        std::cout << '\n';
        return;
    }
    std::cout << "percolate G" << sum.params.str() << " c=" << rat_str(sum.c)
              << " p=" << fixed6(sum.p) << " N=" << sum.vertex_count
              << " trials=" << sum.trials.size() << " seed=" << sum.seed
              << '\n'
              << "  mean_L1/N    " << fixed6(sum.mean_largest_fraction)
              << "  (stddev " << fixed6(sum.stddev_largest_fraction) << ")\n"
              << "  predicted    " << sig12(sum.predicted_fraction) << '\n';
    std::cout << "  largest     ";
    for (const auto& t : sum.trials) std::cout << ' ' << t.largest;
    std::cout << "\n  second      ";
    for (const auto& t : sum.trials) std::cout << ' ' << t.second;
    std::cout << '\n';
}

int run_percolate(const GraphParams& p, const std::vector<BigRat>& c_values,
                  long trials, std::uint64_t seed, std::size_t cap,
                  Format fmt) {
    Stopwatch sw;
    jg::BuildLimits limits;
    limits.max_vertices = cap;
    const auto rows = jg::threshold_scan(p, c_values, trials, seed, limits);
    bool first = true;
    for (const auto& sum : rows) {
        print_percolation_summary(sum, fmt, !first);
        first = false;
    }
    report_time("percolate", sw);
    return 0;
}

// --------------------------------------------------------------- alpha-bar

int run_alpha_bar(double c, Format fmt) {
    Stopwatch sw;
    const double ab = jg::alpha_bar(c);  // throws for c <= 1
    const double frac = 1.0 - ab / c;
    if (fmt == Format::json_lines) {
        json rec{{"command", "alpha-bar"},
                 {"c", c},
                 {"alpha_bar", ab},
                 {"predicted_giant_fraction", frac}};
        std::cout << rec.dump() << '\n';
    } else if (fmt == Format::csv) {
        std::cout << "c,alpha_bar,predicted_giant_fraction\n"
                  << sig12(c) << ',' << sig12(ab) << ',' << sig12(frac)
                  << '\n';
    } else {
        std::cout << "alpha_bar(" << sig12(c) << ") = " << sig12(ab) << '\n'
                  << "predicted_giant_fraction = " << sig12(frac) << '\n';
    }
    report_time("alpha-bar", sw);
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact Johnson-graph spectra, bound checks and percolation"};
    app.require_subcommand(1);

    long n = 0, r = 0, s = 0;
    CommonOpts fmt_spectrum, fmt_verify, fmt_scan, fmt_percolate, fmt_alpha;

    auto* cmd_spectrum =
        app.add_subcommand("spectrum", "exact spectrum, lambda and argmax");
    bool merged = false;
    cmd_spectrum->add_option("--n", n, "ground-set size")->required();
    cmd_spectrum->add_option("--r", r, "subset size")->required();
    cmd_spectrum->add_option("--s", s, "intersection size")->required();
    cmd_spectrum->add_flag("--merged", merged,
                           "also list distinct eigenvalues with summed "
                           "multiplicities");
    add_format_flags(cmd_spectrum, fmt_spectrum);

    auto* cmd_verify = app.add_subcommand(
        "verify", "check one exact statement against the spectrum");
    std::string theorem;
    std::string alpha_text;
    long moments_K = -1;
    std::size_t cap = 20000;
    cmd_verify->add_option("--n", n, "ground-set size")->required();
    cmd_verify->add_option("--r", r, "subset size")->required();
    cmd_verify->add_option("--s", s, "intersection size")->required();
    cmd_verify
        ->add_option("--theorem", theorem,
                     "one of lovasz, brouwer, t4, main, lemma6, oracle")
        ->required();
    cmd_verify->add_option("--alpha", alpha_text,
                           "density ratio for --theorem main (e.g. 1/2)");
    cmd_verify->add_option("--K", moments_K,
                           "moments for --theorem oracle (default 2r+1)");
    cmd_verify->add_option("--cap", cap,
                           "vertex cap for --theorem oracle (default 20000)");
    add_format_flags(cmd_verify, fmt_verify);

    auto* cmd_scan = app.add_subcommand(
        "scan", "verify a theorem across a CSV of parameter triples");
    std::string input;
    cmd_scan->add_option("--input", input, "CSV file with header n,r,s")
        ->required();
    cmd_scan
        ->add_option("--theorem", theorem,
                     "one of lovasz, brouwer, t4, t5.1, main")
        ->required();
    cmd_scan->add_option("--alpha", alpha_text, "density ratio for main");
    add_format_flags(cmd_scan, fmt_scan);

    auto* cmd_percolate = app.add_subcommand(
        "percolate", "sample random subgraphs and report component sizes");
    std::string c_text, c_list_text;
    long trials = 20;
    std::uint64_t seed = 0;
    cmd_percolate->add_option("--n", n, "ground-set size")->required();
    cmd_percolate->add_option("--r", r, "subset size")->required();
    cmd_percolate->add_option("--s", s, "intersection size")->required();
    auto* c_opt = cmd_percolate->add_option(
        "--c", c_text, "intensity; edges kept with probability c/d");
    cmd_percolate
        ->add_option("--c-list", c_list_text,
                     "comma-separated intensities, one summary row each")
        ->excludes(c_opt);
    cmd_percolate->add_option("--trials", trials, "independent trials");
    cmd_percolate->add_option("--seed", seed, "stream seed");
    cmd_percolate->add_option("--cap", cap, "vertex cap (default 20000)");
    add_format_flags(cmd_percolate, fmt_percolate);

    auto* cmd_alpha = app.add_subcommand(
        "alpha-bar", "root of x e^{-x} = c e^{-c} and the giant fraction");
    std::string alpha_c_text;
    cmd_alpha->add_option("--c", alpha_c_text, "intensity, must be > 1")
        ->required();
    add_format_flags(cmd_alpha, fmt_alpha);

    CLI11_PARSE(app, argc, argv);

    try {
        if (cmd_spectrum->parsed()) {
            return run_spectrum(GraphParams::checked(n, r, s), merged,
                                fmt_spectrum.format());
        }
        if (cmd_verify->parsed()) {
            const auto p = GraphParams::checked(n, r, s);
            const Format fmt = fmt_verify.format();
            if (theorem == "oracle")
                return run_verify_oracle(p, moments_K, cap, fmt);
            if (theorem == "lemma6") return run_verify_recurrence(p, fmt);
            const auto t = jg::theorem_from_name(theorem);
            if (!t || *t == jg::Theorem::t5_1)
                throw std::invalid_argument(
                    "verify: unknown theorem '" + theorem +
                    "' (expected lovasz, brouwer, t4, main, lemma6, oracle)");
            std::optional<BigRat> alpha;
            if (!alpha_text.empty()) alpha = parse_rational(alpha_text);
            return run_verify_theorem(p, *t, alpha, fmt);
        }
        if (cmd_scan->parsed()) {
            const auto t = jg::theorem_from_name(theorem);
            if (!t)
                throw std::invalid_argument(
                    "scan: unknown theorem '" + theorem +
                    "' (expected lovasz, brouwer, t4, t5.1, main)");
            std::optional<BigRat> alpha;
            if (!alpha_text.empty()) alpha = parse_rational(alpha_text);
            if (*t == jg::Theorem::main_bound && !alpha)
                throw std::invalid_argument("scan: --theorem main needs --alpha");
            return run_scan(input, *t, alpha, fmt_scan.format());
        }
        if (cmd_percolate->parsed()) {
            const auto p = GraphParams::checked(n, r, s);
            std::vector<BigRat> cs;
            if (!c_text.empty()) cs.push_back(parse_rational(c_text));
            std::string token;
            std::istringstream ss(c_list_text);
            while (std::getline(ss, token, ','))
                if (!token.empty()) cs.push_back(parse_rational(token));
            if (cs.empty())
                throw std::invalid_argument(
                    "percolate: give --c or --c-list");
            return run_percolate(p, cs, trials, seed, cap,
                                 fmt_percolate.format());
        }
        if (cmd_alpha->parsed()) {
            const double c = parse_rational(alpha_c_text).get_d();
            return run_alpha_bar(c, fmt_alpha.format());
        }
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    }
    return 0;
}
