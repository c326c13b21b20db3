// trigcert: certified nonnegativity of trigonometric polynomials.
//
// Subcommands mirror the two-step workflow of reducing a trigonometric
// polynomial to an algebraic one and counting roots with Sturm chains:
//   reduce | sturm | verify | minimize | check-cert

#include <CLI11.hpp>
#include <json.hpp>

#include <atomic>
#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include "trigcert/minimize.hpp"
#include "trigcert/verify.hpp"

namespace {

using json = nlohmann::json;
using namespace trigcert;

ParseOptions global_parse_options() {
    ParseOptions opts;
    if (const char* env = std::getenv("TRIGCERT_MAX_DEGREE")) {
        try {
            long v = std::stol(env);
            if (v >= 1) opts.max_frequency = static_cast<unsigned>(v);
        } catch (...) {
            // Ignore an unparseable override; the default cap stays.
        }
    }
    return opts;
}

Rational parse_tolerance(const std::string& text) {
    // Accepts p/q, plain integers, and the shorthand "1e-9".
    size_t epos = text.find('e');
    if (epos == std::string::npos) epos = text.find('E');
    if (epos != std::string::npos) {
        Rational mant = Rational::from_string(text.substr(0, epos));
        long exp = std::stol(text.substr(epos + 1));
        Rational scale(1);
        for (long i = 0; i < std::labs(exp); ++i) scale *= Rational(10);
        return exp < 0 ? mant / scale : mant * scale;
    }
    return Rational::from_string(text);
}

std::string param_poly_str(const ParamPoly& p, const std::string& var,
                           const std::string& param) {
    if (p.is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (int i = p.degree(); i >= 0; --i) {
        const Poly c = p.coeff(i);
        if (c.is_zero()) continue;
        std::string var_part;
        if (i == 1)
            var_part = var;
        else if (i > 1)
            var_part = var + "^" + std::to_string(i);

        if (c.degree() == 0) {
            const Rational r = c.coeff(0);
            const Rational ar = r.abs();
            if (first) {
                if (r.sign() < 0) os << '-';
                first = false;
            } else {
                os << (r.sign() < 0 ? " - " : " + ");
            }
            if (i == 0)
                os << ar.str();
            else if (ar.is_one())
                os << var_part;
            else
                os << ar.str() << '*' << var_part;
        } else {
            if (!first) os << " + ";
            first = false;
            os << '(' << c.str(param) << ')';
            if (i > 0) os << '*' << var_part;
        }
    }
    return os.str();
}

json report_base(const std::string& command) {
    json r;
    r["schema_version"] = "trigcert-v1";
    r["command"] = command;
    return r;
}

struct Timer {
    std::chrono::steady_clock::time_point start = std::chrono::steady_clock::now();
    double ms() const {
        return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start)
            .count();
    }
};

void emit(const json& report, const std::string& format, const std::string& text_form) {
    if (format == "json")
        std::cout << report.dump() << "\n";
    else
        std::cout << text_form;
}

json witness_to_json(const Witness& w) {
    return {{"t", w.t.str()}, {"x_approx", w.x_approx}, {"value", w.value.str()}};
}

int cmd_reduce(const std::string& expr_text, bool cosine, bool sine, const std::string& format,
               bool timings) {
    Timer timer;
    ExprPtr e = parse(expr_text, global_parse_options());
    MixedForm m = normalize(e);
    json r = report_base("reduce");
    r["expression"] = expr_text;
    std::ostringstream text;
    text << "expression = " << expr_text << "\n";

    if (cosine || sine) {
        Poly p = cosine ? to_cosine_poly(m) : to_sine_form(m);
        r[cosine ? "cosine_poly" : "sine_poly"] = p.str("X");
        text << (cosine ? "P(X) = " : "P(X) = ") << p.str("X") << "\n"
             << (cosine ? "form: expression = P(cos x)\n"
                        : "form: expression = sin(x) * P(cos x)\n");
    } else {
        const std::string param = m.parametric ? m.param : "alpha";
        ParamRationalForm rf = weierstrass_param(m);
        r["p1"] = param_poly_str(m.p1, "X", param);
        r["p2"] = param_poly_str(m.p2, "X", param);
        r["numerator"] = param_poly_str(rf.numerator, "T", param);
        r["d"] = rf.denom_scalar.get_str();
        r["m"] = rf.denom_power;
        r["parametric"] = m.parametric;
        text << "P1(X) = " << param_poly_str(m.p1, "X", param) << "\n"
             << "P2(X) = " << param_poly_str(m.p2, "X", param) << "\n"
             << "numerator = " << param_poly_str(rf.numerator, "T", param) << "\n"
             << "d = " << rf.denom_scalar.get_str() << "\n"
             << "m = " << rf.denom_power << "\n";
    }
    if (timings) r["timings"] = {{"total_ms", timer.ms()}};
    emit(r, format, text.str());
    return 0;
}

int cmd_sturm(const std::string& poly_text, const std::string& interval_text,
              const std::string& format, bool timings) {
    Timer timer;
    Poly p = Poly::from_string(poly_text, "T");
    IntervalSpec spec = parse_interval_spec(interval_text);
    if (!spec.is_t_domain)
        throw std::invalid_argument("sturm expects a T-interval, e.g. \"T=0,T=inf\"");
    const int roots = count_roots(p, spec.t);
    json r = report_base("sturm");
    r["polynomial"] = p.str("T");
    r["interval"] = spec.echo;
    r["roots"] = roots;
    if (timings) r["timings"] = {{"total_ms", timer.ms()}};
    std::ostringstream text;
    text << "polynomial = " << p.str("T") << "\n"
         << "interval = T in " << spec.t.str() << "\n"
         << "roots = " << roots << "\n";
    emit(r, format, text.str());
    return 0;
}

int outcome_exit_code(Outcome o) {
    switch (o) {
        case Outcome::Nonnegative: return 0;
        case Outcome::Violated: return 1;
        case Outcome::InconclusiveBoundary: return 2;
    }
    return 3;
}

json verify_report(const std::string& expr_text, const std::string& interval_text,
                   const Verdict& v, bool with_cert) {
    json r = report_base("verify");
    r["expression"] = expr_text;
    r["interval"] = interval_text;
    r["outcome"] = outcome_name(v.outcome);
    r["witness"] = v.witness ? witness_to_json(*v.witness) : json(nullptr);
    if (with_cert) r["certificate"] = json::parse(certificate_to_json(v.certificate));
    return r;
}

Verdict run_verify(const std::string& expr_text, const std::string& interval_text) {
    ExprPtr e = parse(expr_text, global_parse_options());
    IntervalSpec spec = parse_interval_spec(interval_text);
    return spec.is_t_domain ? verify_nonneg_t(e, spec.t) : verify_nonneg(e, spec.a, spec.b);
}

int cmd_verify(const std::string& expr_text, const std::string& interval_text,
               const std::string& cert_path, const std::string& format, bool timings) {
    Timer timer;
    Verdict v = run_verify(expr_text, interval_text);
    if (!cert_path.empty()) {
        std::ofstream out(cert_path);
        if (!out) throw std::runtime_error("cannot write certificate file '" + cert_path + "'");
        out << certificate_to_json(v.certificate) << "\n";
    }
    json r = verify_report(expr_text, interval_text, v, !cert_path.empty());
    if (timings) r["timings"] = {{"total_ms", timer.ms()}};
    std::ostringstream text;
    text << "expression = " << expr_text << "\n"
         << "interval = " << interval_text << "\n"
         << "outcome = " << outcome_name(v.outcome) << "\n";
    if (v.witness) {
        text << "witness T = " << v.witness->t.str() << "\n"
             << "witness x ~= " << v.witness->x_approx << "\n"
             << "witness value = " << v.witness->value.str() << "\n";
    }
    if (v.outcome == Outcome::InconclusiveBoundary)
        text << "note = only boundary points inside the rounding slack failed; "
                "rerun with an explicit T-interval (\"T=a,T=b\") for an exact decision\n";
    if (!cert_path.empty()) text << "certificate = " << cert_path << "\n";
    emit(r, format, text.str());
    return outcome_exit_code(v.outcome);
}

int cmd_verify_batch(const std::string& batch_path, unsigned jobs, const std::string& format) {
    std::ifstream in(batch_path);
    if (!in) throw std::runtime_error("cannot read batch file '" + batch_path + "'");
    struct Item {
        std::string expr, interval;
    };
    std::vector<Item> items;
    std::string line;
    while (std::getline(in, line)) {
        const size_t sep = line.find(';');
        std::string expr = sep == std::string::npos ? line : line.substr(0, sep);
        std::string interval = sep == std::string::npos ? "" : line.substr(sep + 1);
        auto strip = [](std::string& s) {
            while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.erase(s.begin());
            while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.pop_back();
        };
        strip(expr);
        strip(interval);
        if (expr.empty() || expr[0] == '#') continue;
        if (interval.empty())
            throw std::invalid_argument("batch lines must read \"expression ; interval\"");
        items.push_back({std::move(expr), std::move(interval)});
    }

    std::vector<json> reports(items.size());
    std::vector<int> codes(items.size(), 0);
    std::atomic<size_t> next{0};
    auto worker = [&] {
        while (true) {
            const size_t i = next.fetch_add(1);
            if (i >= items.size()) return;
            try {
                Verdict v = run_verify(items[i].expr, items[i].interval);
                reports[i] = verify_report(items[i].expr, items[i].interval, v, false);
                codes[i] = outcome_exit_code(v.outcome);
            } catch (const std::exception& e) {
                json r = report_base("verify");
                r["expression"] = items[i].expr;
                r["interval"] = items[i].interval;
                r["error"] = e.what();
                reports[i] = std::move(r);
                codes[i] = 3;
            }
        }
    };
    if (jobs <= 1) {
        worker();
    } else {
        std::vector<std::thread> pool;
        for (unsigned t = 0; t < jobs; ++t) pool.emplace_back(worker);
        for (auto& t : pool) t.join();
    }

    int exit_code = 0;
    for (size_t i = 0; i < items.size(); ++i) {
        if (format == "json") {
            std::cout << reports[i].dump() << "\n";
        } else {
            std::cout << items[i].expr << " ; " << items[i].interval << " -> "
                      << (reports[i].contains("error")
                              ? std::string("error: ") + reports[i]["error"].get<std::string>()
                              : reports[i]["outcome"].get<std::string>())
                      << "\n";
        }
        exit_code = std::max(exit_code, codes[i]);
    }
    return exit_code;
}

int cmd_minimize(const std::string& expr_text, const std::string& interval_text,
                 const std::string& tol_text, const std::string& cert_lo_path,
                 const std::string& cert_hi_path, const std::string& format, bool timings) {
    Timer timer;
    ExprPtr e = parse(expr_text, global_parse_options());
    IntervalSpec spec = parse_interval_spec(interval_text);
    if (spec.is_t_domain)
        throw std::invalid_argument("minimize expects an x-interval in units of pi");
    const Rational tol = parse_tolerance(tol_text);
    Enclosure enc = min_alpha(e, spec.a, spec.b, tol);

    auto dump_cert = [](const std::string& path, const Certificate& cert) {
        if (path.empty()) return;
        std::ofstream out(path);
        if (!out) throw std::runtime_error("cannot write certificate file '" + path + "'");
        out << certificate_to_json(cert) << "\n";
    };
    dump_cert(cert_lo_path, enc.lo_cert);
    dump_cert(cert_hi_path, enc.hi_cert);

    json r = report_base("minimize");
    r["expression"] = expr_text;
    r["interval"] = interval_text;
    r["tol"] = tol.str();
    r["alpha_lo"] = enc.lo.str();
    r["alpha_hi"] = enc.hi.str();
    r["min_f_lo"] = (-enc.hi).str();
    r["min_f_hi"] = (-enc.lo).str();
    r["discriminant"] = enc.discriminant.str("alpha");
    json cands = json::array();
    for (const Interval& iv : enc.candidates)
        cands.push_back({{"lo", iv.lo->str()}, {"hi", iv.hi->str()}});
    r["candidates"] = cands;
    json exact = json::array();
    for (const Rational& c : enc.exact_candidates) exact.push_back(c.str());
    r["exact_candidates"] = exact;
    if (!cert_lo_path.empty()) r["lo_certificate"] = json::parse(certificate_to_json(enc.lo_cert));
    if (!cert_hi_path.empty()) r["hi_certificate"] = json::parse(certificate_to_json(enc.hi_cert));
    if (timings) r["timings"] = {{"total_ms", timer.ms()}};

    char approx[64], neg_approx[64];
    const double mid = 0.5 * (enc.lo.to_double() + enc.hi.to_double());
    std::snprintf(approx, sizeof approx, "%.12g", mid);
    std::snprintf(neg_approx, sizeof neg_approx, "%.12g", -mid);
    std::ostringstream text;
    text << "expression = " << expr_text << "\n"
         << "interval = " << interval_text << "\n"
         << "alpha enclosure = [" << enc.lo.str() << ", " << enc.hi.str() << "]\n"
         << "alpha ~= " << approx << "\n"
         << "min f enclosure = [" << (-enc.hi).str() << ", " << (-enc.lo).str() << "]\n"
         << "min f ~= " << neg_approx << "\n"
         << "discriminant = " << enc.discriminant.str("alpha") << "\n";
    text << "candidate intervals =";
    for (const Interval& iv : enc.candidates) text << " " << iv.str();
    text << "\nexact candidates =";
    for (const Rational& c : enc.exact_candidates) text << " " << c.str();
    text << "\n";
    if (!cert_lo_path.empty()) text << "lo certificate = " << cert_lo_path << "\n";
    if (!cert_hi_path.empty()) text << "hi certificate = " << cert_hi_path << "\n";
    emit(r, format, text.str());
    return 0;
}

int cmd_check_cert(const std::string& path, const std::string& format) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot read certificate file '" + path + "'");
    std::stringstream buffer;
    buffer << in.rdbuf();

    std::vector<std::string> reasons;
    bool ok = false;
    try {
        Certificate cert = certificate_from_json(buffer.str());
        ok = check_certificate(cert, &reasons);
    } catch (const std::exception& e) {
        reasons.push_back(e.what());
    }
    json r = report_base("check-cert");
    r["file"] = path;
    r["valid"] = ok;
    r["reasons"] = reasons;
    std::ostringstream text;
    text << "certificate = " << path << "\n" << (ok ? "valid = true\n" : "valid = false\n");
    for (const std::string& reason : reasons) text << "reason = " << reason << "\n";
    emit(r, format, text.str());
    return ok ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"certified nonnegativity of trigonometric polynomials"};
    app.require_subcommand(1);

    // reduce
    auto* reduce_cmd = app.add_subcommand(
        "reduce", "rewrite a trigonometric polynomial as an algebraic one");
    std::string reduce_expr;
    bool reduce_cosine = false, reduce_sine = false, reduce_timings = false;
    std::string reduce_format = "text";
    reduce_cmd->add_option("expression", reduce_expr, "trigonometric polynomial")->required();
    reduce_cmd->add_flag("--cosine", reduce_cosine, "emit the pure-cosine reduction P(X)");
    reduce_cmd->add_flag("--sine", reduce_sine, "emit the pure-sine reduction sin(x)*P(X)");
    reduce_cmd->add_option("--format", reduce_format, "text|json")
        ->check(CLI::IsMember({"text", "json"}));
    reduce_cmd->add_flag("--timings", reduce_timings, "include timings in the report");

    // sturm
    auto* sturm_cmd =
        app.add_subcommand("sturm", "count distinct real roots of a polynomial in T");
    std::string sturm_poly, sturm_interval, sturm_format = "text";
    bool sturm_timings = false;
    sturm_cmd->add_option("polynomial", sturm_poly, "polynomial in T")->required();
    sturm_cmd->add_option("interval", sturm_interval, "T-interval, e.g. \"T=0,T=inf\"")
        ->required();
    sturm_cmd->add_option("--format", sturm_format, "text|json")
        ->check(CLI::IsMember({"text", "json"}));
    sturm_cmd->add_flag("--timings", sturm_timings, "include timings in the report");

    // verify
    auto* verify_cmd =
        app.add_subcommand("verify", "decide nonnegativity on an interval, with certificate");
    std::string verify_expr, verify_interval, verify_cert, verify_format = "text";
    std::string verify_batch;
    unsigned verify_jobs = 1;
    bool verify_timings = false;
    verify_cmd->add_option("expression", verify_expr, "trigonometric polynomial");
    verify_cmd->add_option("interval", verify_interval,
                           "x-interval \"a,b\" in multiples of pi, or T-interval \"T=a,T=b\"");
    verify_cmd->add_option("--cert", verify_cert, "write the certificate to this file");
    verify_cmd->add_option("--batch", verify_batch,
                           "verify \"expression ; interval\" lines from a file");
    verify_cmd->add_option("--jobs", verify_jobs, "parallel workers for --batch");
    verify_cmd->add_option("--format", verify_format, "text|json")
        ->check(CLI::IsMember({"text", "json"}));
    verify_cmd->add_flag("--timings", verify_timings, "include timings in the report");

    // minimize
    auto* minimize_cmd = app.add_subcommand(
        "minimize", "least alpha with alpha-expression nonnegative; min f = -alpha");
    std::string min_expr, min_interval, min_tol = "1/1000000000";
    std::string min_cert_lo, min_cert_hi, min_format = "text";
    bool min_timings = false;
    minimize_cmd->add_option("expression", min_expr, "expression affine in one parameter")
        ->required();
    minimize_cmd->add_option("interval", min_interval, "x-interval in multiples of pi")
        ->required();
    minimize_cmd->add_option("--tol", min_tol, "enclosure width (rational or 1e-9 form)");
    minimize_cmd->add_option("--cert-lo", min_cert_lo, "write the violation certificate here");
    minimize_cmd->add_option("--cert-hi", min_cert_hi, "write the nonnegativity certificate here");
    minimize_cmd->add_option("--format", min_format, "text|json")
        ->check(CLI::IsMember({"text", "json"}));
    minimize_cmd->add_flag("--timings", min_timings, "include timings in the report");

    // check-cert
    auto* check_cmd = app.add_subcommand("check-cert", "re-verify a certificate file");
    std::string check_path, check_format = "text";
    check_cmd->add_option("file", check_path, "certificate JSON file")->required();
    check_cmd->add_option("--format", check_format, "text|json")
        ->check(CLI::IsMember({"text", "json"}));

    CLI11_PARSE(app, argc, argv);

    try {
        if (reduce_cmd->parsed())
            return cmd_reduce(reduce_expr, reduce_cosine, reduce_sine, reduce_format,
                              reduce_timings);
        if (sturm_cmd->parsed())
            return cmd_sturm(sturm_poly, sturm_interval, sturm_format, sturm_timings);
        if (verify_cmd->parsed()) {
            if (!verify_batch.empty()) return cmd_verify_batch(verify_batch, verify_jobs, verify_format);
            if (verify_expr.empty() || verify_interval.empty())
                throw std::invalid_argument("verify needs an expression and an interval (or --batch)");
            return cmd_verify(verify_expr, verify_interval, verify_cert, verify_format,
                              verify_timings);
        }
        if (minimize_cmd->parsed())
            return cmd_minimize(min_expr, min_interval, min_tol, min_cert_lo, min_cert_hi,
                                min_format, min_timings);
        if (check_cmd->parsed()) return cmd_check_cert(check_path, check_format);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 3;
    }
    return 3;
}
