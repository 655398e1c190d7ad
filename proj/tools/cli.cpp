#include "cli.hpp"

#include <cmath>
#include <functional>
#include <optional>
#include <ostream>

#include <CLI11.hpp>

#include <foursq/bundled.hpp>
#include <foursq/certlang.hpp>
#include <foursq/numthy.hpp>
#include <foursq/verify.hpp>

namespace foursq::cli {

using nlohmann::json;

json to_json(const VerificationReport &r)
{
    json j;
    j["subject"] = r.subject;
    j["status"] = r.passed() ? "pass" : "fail";
    j["checked_order"] = r.checked_order;
    j["params"] = json::object();
    for (const auto &[k, v] : r.params) {
        j["params"][k] = v;
    }
    if (r.first_discrepancy) {
        const Discrepancy &d = *r.first_discrepancy;
        j["first_discrepancy"] = {
            {"power", d.power}, {"expected", d.expected.get_str()}, {"got", d.got.get_str()}, {"where", d.where}};
    } else {
        j["first_discrepancy"] = nullptr;
    }
    if (!r.note.empty()) {
        j["note"] = r.note;
    }
    return j;
}

std::string render_plain(const json &report)
{
    std::string line = report.at("status") == "pass" ? "[PASS] " : "[FAIL] ";
    line += report.at("subject").get<std::string>();
    for (const auto &[k, v] : report.at("params").items()) {
        line += " " + k + "=" + v.dump();
    }
    if (const auto &d = report.at("first_discrepancy"); !d.is_null()) {
        line += ": first discrepancy at " + d.at("power").dump();
        if (const auto w = d.at("where").get<std::string>(); !w.empty()) {
            line += " (" + w + ")";
        }
        line += ": expected " + d.at("expected").get<std::string>() + ", got " + d.at("got").get<std::string>();
    }
    return line;
}

namespace {

class Emitter {
public:
    Emitter(std::ostream &out, Format fmt) : out_(out), fmt_(fmt) {}

    void report(const VerificationReport &r)
    {
        ++total_;
        if (r.passed()) {
            ++passed_;
        }
        const json j = to_json(r);
        if (fmt_ == Format::json) {
            out_ << j.dump() << '\n';
        } else {
            out_ << render_plain(j) << '\n';
        }
        out_.flush();
    }

    void series(const std::string &target, const TruncatedSeries &s)
    {
        if (fmt_ == Format::json) {
            json coeffs = json::array();
            for (const auto &c : s.coeffs()) {
                coeffs.push_back(c.get_str());
            }
            out_ << json{{"target", target}, {"order", s.order()}, {"coefficients", coeffs}}.dump() << '\n';
        } else {
            out_ << to_coeff_string(s) << '\n';
        }
    }

    void table(const std::vector<DivisorProfile> &rows)
    {
        if (fmt_ == Format::json) {
            json t = json::array();
            for (const auto &p : rows) {
                t.push_back({{"n", p.n}, {"r4", p.r4}, {"sigma_not4", p.sigma_not4}});
            }
            out_ << json{{"table", t}}.dump() << '\n';
            return;
        }
        out_ << "n r4 sigma_not4\n";
        for (const auto &p : rows) {
            out_ << p.n << ' ' << p.r4 << ' ' << p.sigma_not4 << '\n';
        }
    }

    int finish()
    {
        const bool ok = passed_ == total_;
        if (fmt_ == Format::json) {
            out_ << json{{"result", ok ? "PASS" : "FAIL"}, {"passed", passed_}, {"total", total_}}.dump() << '\n';
        } else {
            out_ << "RESULT: " << (ok ? "PASS" : "FAIL") << ' ' << passed_ << '/' << total_ << '\n';
        }
        return ok ? exit_pass : exit_fail;
    }

private:
    std::ostream &out_;
    Format fmt_;
    std::size_t passed_ = 0;
    std::size_t total_ = 0;
};

std::int64_t ceil_sqrt(std::int64_t v)
{
    auto r = static_cast<std::int64_t>(std::sqrt(static_cast<double>(v)));
    while (r * r < v) {
        ++r;
    }
    while (r > 0 && (r - 1) * (r - 1) >= v) {
        --r;
    }
    return r;
}

} // namespace

int run(const std::vector<std::string> &args, std::ostream &out, std::ostream &err)
{
    CLI::App app{"Exact verification of the four-square theorem via WZ certificates and q-series identities",
                 args.empty() ? std::string("foursq") : args.front()};
    app.require_subcommand(1);

    Format fmt = Format::plain;
    const std::map<std::string, Format> formats{{"plain", Format::plain}, {"json", Format::json}};
    auto add_format = [&](CLI::App *sub) {
        sub->add_option("--format", fmt, "Output format: plain or json")
            ->transform(CLI::CheckedTransformer(formats, CLI::ignore_case));
    };

    // verify-lemma
    std::int64_t lemma_n_max = 25;
    std::size_t lemma_order = 101;
    std::optional<std::size_t> perturb_power;
    auto *lemma = app.add_subcommand("verify-lemma", "Check both finite identities and their step recurrences");
    lemma->add_option("--n-max", lemma_n_max, "Largest n checked")->check(CLI::NonNegativeNumber);
    lemma->add_option("--order", lemma_order, "Truncation order N")->check(CLI::PositiveNumber);
    lemma->add_option("--perturb-power", perturb_power)->group("");
    add_format(lemma);

    // check-cert
    std::string cert_path;
    std::size_t cert_order = 60;
    std::int64_t cert_n_max = 6;
    auto *cert = app.add_subcommand("check-cert", "Verify WZ certificates symbolically and numerically");
    auto *cert_pos = cert->add_option("path", cert_path, "Certificate file (default: bundled jacobi.cert)");
    cert->add_option("--cert", cert_path, "Certificate file")->excludes(cert_pos);
    cert->add_option("--order", cert_order, "Truncation order for numeric checks")->check(CLI::PositiveNumber);
    cert->add_option("--n-max", cert_n_max, "Largest n for numeric spot checks")->check(CLI::NonNegativeNumber);
    add_format(cert);

    // jacobi
    std::int64_t jacobi_n_max = 2000;
    std::optional<std::size_t> jacobi_order;
    auto *jacobi = app.add_subcommand("jacobi", "Check r4(n) = 8 * sigma_not4(n) against theta^4 and enumeration");
    jacobi->add_option("--n-max", jacobi_n_max, "Largest n checked")->check(CLI::PositiveNumber);
    jacobi->add_option("--order", jacobi_order, "Truncation order (>= n-max + 1)")->check(CLI::PositiveNumber);
    add_format(jacobi);

    // expand
    std::string target;
    std::size_t expand_order = 20;
    std::optional<std::int64_t> expand_n;
    const std::vector<std::string> targets{"a'", "a-prime", "b'", "b-prime", "eq2", "eq3", "theta4", "lambert"};
    auto *expand = app.add_subcommand("expand", "Print the coefficients of one of the series");
    expand->add_option("--target", target, "a', b', eq2, eq3, theta4 or lambert")
        ->required()
        ->check(CLI::IsMember(targets));
    expand->add_option("--order", expand_order, "Number of coefficients")->check(CLI::PositiveNumber);
    expand->add_option("--n", expand_n, "n for eq3")->check(CLI::NonNegativeNumber);
    add_format(expand);

    std::vector<const char *> argv;
    argv.reserve(args.size());
    for (const auto &a : args) {
        argv.push_back(a.c_str());
    }
    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::CallForHelp &) {
        out << app.help();
        return exit_pass;
    } catch (const CLI::CallForAllHelp &) {
        out << app.help("", CLI::AppFormatMode::All);
        return exit_pass;
    } catch (const CLI::ParseError &e) {
        err << "error: " << e.what() << '\n';
        return exit_usage;
    }

    Emitter emit(out, fmt);
    try {
        if (lemma->parsed()) {
            std::optional<Perturbation> perturb;
            if (perturb_power) {
                if (*perturb_power >= lemma_order) {
                    err << "error: --perturb-power must be below --order\n";
                    return exit_usage;
                }
                perturb = Perturbation{*perturb_power, 1};
            }
            for (std::int64_t n = 0; n <= lemma_n_max; ++n) {
                emit.report(check_lemma_a(n, lemma_order, perturb));
                emit.report(check_lemma_b(n, lemma_order));
                emit.report(check_steps(n, lemma_order));
            }
            return emit.finish();
        }

        if (cert->parsed()) {
            std::vector<CertificateSet> sets;
            try {
                sets = cert_path.empty() ? load_certificates(bundled_certificate_text())
                                         : load_certificate_file(cert_path);
            } catch (const LoadError &e) {
                err << "error: " << e.what() << '\n';
                return exit_usage;
            }
            for (const auto &c : sets) {
                emit.report(check_wz_symbolic(c));
                if (!family_for(c.name)) {
                    err << "note: no concrete builders for '" << c.name << "'; numeric checks skipped\n";
                    continue;
                }
                emit.report(check_ratio_consistency(c, 6, 6, cert_order));
                for (std::int64_t n = 0; n <= cert_n_max; ++n) {
                    emit.report(check_wz_numeric(c, n, cert_order));
                    emit.report(check_telescoping(c, n, cert_order));
                    emit.report(check_rhs_step(c, n, cert_order));
                }
            }
            return emit.finish();
        }

        if (jacobi->parsed()) {
            const std::size_t order = jacobi_order.value_or(static_cast<std::size_t>(jacobi_n_max) + 1);
            if (order < static_cast<std::size_t>(jacobi_n_max) + 1) {
                err << "error: --order must be at least --n-max + 1\n";
                return exit_usage;
            }
            std::vector<DivisorProfile> rows;
            for (std::int64_t n = 1; n <= std::min<std::int64_t>(jacobi_n_max, 10); ++n) {
                rows.push_back(divisor_profile(n));
            }
            emit.table(rows);
            emit.report(jacobi_check(jacobi_n_max, order));
            VerificationReport chain;
            chain.subject = "divisor-chain";
            chain.params = {{"n_max", jacobi_n_max}};
            for (std::int64_t n = 1; n <= jacobi_n_max; ++n) {
                VerificationReport one = divisor_chain_check(n);
                if (!one.passed()) {
                    chain.first_discrepancy = one.first_discrepancy;
                    break;
                }
            }
            emit.report(chain);
            return emit.finish();
        }

        if (expand->parsed()) {
            const auto order = expand_order;
            if (target == "eq3") {
                if (!expand_n) {
                    err << "error: --target eq3 requires --n\n";
                    return exit_usage;
                }
                emit.series(target, eq3_lhs(*expand_n, order));
                emit.report(check_eq3(*expand_n, order));
                return emit.finish();
            }
            if (target == "eq2") {
                emit.series(target, pow(theta_full(order), 4));
                emit.report(check_eq2(order));
                return emit.finish();
            }
            if (target == "a'" || target == "a-prime") {
                emit.series(target, a_prime_lhs(order));
                emit.report(check_limit_a(order));
                return emit.finish();
            }
            if (target == "b'" || target == "b-prime") {
                emit.series(target, theta_partial(ceil_sqrt(static_cast<std::int64_t>(order)), order));
                emit.report(check_limit_b(order));
                return emit.finish();
            }
            emit.series(target, target == "theta4" ? pow(theta_full(order), 4) : lambert_rhs(order));
            return exit_pass;
        }
    } catch (const std::exception &e) {
        err << "error: " << e.what() << '\n';
        return exit_usage;
    }
    return exit_usage;
}

} // namespace foursq::cli
