#include "cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <fstream>
#include <map>
#include <optional>
#include <sstream>

#include "trigdunkl/errors.hpp"
#include "trigdunkl/format.hpp"
#include "trigdunkl/kernel.hpp"
#include "trigdunkl/operators.hpp"
#include "trigdunkl/specfun.hpp"
#include "trigdunkl/verify.hpp"

namespace trigdunkl::cli {

namespace {

using ordered_json = nlohmann::ordered_json;

enum class Format { json, csv };

struct Common {
    Format format = Format::json;
    std::string out_path;
    QuadratureConfig quad;
};

struct KOptions {
    double k1 = 0.0;
    double k2 = 0.0;
    double k1_im = 0.0;
    double k2_im = 0.0;

    Multiplicity multiplicity() const { return Multiplicity(cplx(k1, k1_im), cplx(k2, k2_im)); }
};

ordered_json complex_json(cplx v) {
    ordered_json j;
    j["re"] = v.real();
    j["im"] = v.imag();
    return j;
}

// Real parameters print as numbers, complex ones as {re, im}.
ordered_json param_json(cplx v) { return v.imag() == 0.0 ? ordered_json(v.real()) : complex_json(v); }

std::string csv_field(const std::string& s) {
    if (s.find_first_of(",\"\n") == std::string::npos) return s;
    std::string out = "\"";
    for (char c : s) {
        if (c == '"') out += '"';
        out += c;
    }
    return out + "\"";
}

std::string csv_row(const std::vector<std::string>& fields) {
    std::string line;
    for (std::size_t i = 0; i < fields.size(); ++i) {
        if (i) line += ',';
        line += csv_field(fields[i]);
    }
    return line + "\n";
}

// A parsed 'lo:hi:count' range or a comma-separated list.
std::vector<double> parse_axis(const std::string& text, const std::string& name) {
    auto to_double = [&](const std::string& s) {
        std::size_t used = 0;
        double v = 0.0;
        try {
            v = std::stod(s, &used);
        } catch (const std::exception&) {
            used = 0;
        }
        if (used != s.size() || s.empty()) throw DomainError(name + ": '" + s + "' is not a number");
        return v;
    };
    std::vector<double> out;
    if (text.find(':') != std::string::npos) {
        std::vector<std::string> parts;
        std::stringstream ss(text);
        std::string item;
        while (std::getline(ss, item, ':')) parts.push_back(item);
        if (parts.size() != 3) throw DomainError(name + ": range must be lo:hi:count");
        const double lo = to_double(parts[0]);
        const double hi = to_double(parts[1]);
        std::size_t used = 0;
        long count = 0;
        try {
            count = std::stol(parts[2], &used);
        } catch (const std::exception&) {
            used = 0;
        }
        if (used != parts[2].size() || count < 1) throw DomainError(name + ": count must be an integer >= 1");
        if (!(lo <= hi)) throw DomainError(name + ": range needs lo <= hi");
        if (count == 1) return {lo};
        for (long i = 0; i < count; ++i) out.push_back(lo + (hi - lo) * static_cast<double>(i) / (count - 1));
        out.back() = hi;
        return out;
    }
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) out.push_back(to_double(item));
    if (out.empty()) throw DomainError(name + ": empty list");
    return out;
}

void add_common(CLI::App& sub, Common& c) {
    sub.add_option("--format", c.format, "Output format")
        ->transform(CLI::CheckedTransformer(std::map<std::string, Format>{{"json", Format::json}, {"csv", Format::csv}}))
        ->option_text("{json,csv}");
    sub.add_option("--out", c.out_path, "Write the report to this file instead of standard output");
    sub.add_option("--jacobi-nodes", c.quad.jacobi_nodes, "Gauss-Jacobi nodes of the inner kernel integral")
        ->capture_default_str();
    sub.add_option("--level", c.quad.tanh_sinh_level, "Tanh-sinh level of the inner integral (complex k)")
        ->capture_default_str();
    sub.add_option("--outer-level", c.quad.outer_level, "Tanh-sinh level of the V / tV integrals")
        ->capture_default_str();
    sub.add_option("--pairing-level", c.quad.pairing_level, "Tanh-sinh level of the duality pairings")
        ->capture_default_str();
}

void add_k(CLI::App& sub, KOptions& k) {
    sub.add_option("--k1", k.k1, "Multiplicity k1 (real part)")->required();
    sub.add_option("--k2", k.k2, "Multiplicity k2 (real part)")->required();
    sub.add_option("--k1-im", k.k1_im, "Imaginary part of k1");
    sub.add_option("--k2-im", k.k2_im, "Imaginary part of k2");
}

void check_quadrature(const QuadratureConfig& q) {
    if (q.jacobi_nodes < 1 || q.jacobi_nodes > 256) throw DomainError("--jacobi-nodes must lie in [1, 256]");
    for (int level : {q.tanh_sinh_level, q.outer_level, q.pairing_level})
        if (level < 1 || level > 11) throw DomainError("tanh-sinh levels must lie in [1, 11]");
}

class Emitter {
public:
    Emitter(const Common& c, std::ostream& out) : common_(c), out_(out) {}

    void write(const std::string& text) {
        if (common_.out_path.empty()) {
            out_ << text;
            return;
        }
        std::ofstream file(common_.out_path, std::ios::binary);
        if (!file) throw DomainError("cannot open output file '" + common_.out_path + "'");
        file << text;
        if (!file) throw DomainError("cannot write output file '" + common_.out_path + "'");
    }

private:
    const Common& common_;
    std::ostream& out_;
};

std::string dump(const ordered_json& j) { return j.dump(2) + "\n"; }

int cmd_kernel(const Common& c, const KOptions& ko, double x, double y, const std::string& method,
               std::ostream& out) {
    const Multiplicity k = ko.multiplicity();
    const KernelPoint p(x, y);
    const EvalResult r = method == "mourou" ? kernel_K_mourou(k, p, c.quad) : kernel_K(k, p, c.quad);
    Emitter emit(c, out);
    if (c.format == Format::json) {
        ordered_json j;
        j["k1"] = param_json(k.k1());
        j["k2"] = param_json(k.k2());
        j["x"] = x;
        j["y"] = y;
        j["method"] = method;
        j["value"] = k.real_positive() ? ordered_json(r.value.real()) : complex_json(r.value);
        j["est_error"] = r.est_error;
        j["quadrature"] = r.method;
        emit.write(dump(j));
    } else {
        std::string text = csv_row({"k1_re", "k1_im", "k2_re", "k2_im", "x", "y", "method", "value_re", "value_im",
                                    "est_error"});
        text += csv_row({format_double(k.k1().real()), format_double(k.k1().imag()), format_double(k.k2().real()),
                         format_double(k.k2().imag()), format_double(x), format_double(y), method,
                         format_double(r.value.real()), format_double(r.value.imag()), format_double(r.est_error)});
        emit.write(text);
    }
    return kOk;
}

int cmd_opdam(const Common& c, const KOptions& ko, double lambda, double lambda_im, double x, std::ostream& out) {
    const Multiplicity k = ko.multiplicity();
    const SpectralParam lam(cplx(lambda, lambda_im));
    const cplx g = opdam_G(k, lam, x);
    Emitter emit(c, out);
    if (c.format == Format::json) {
        ordered_json j;
        j["k1"] = param_json(k.k1());
        j["k2"] = param_json(k.k2());
        j["lambda"] = param_json(lam.value());
        j["x"] = x;
        j["value"] = complex_json(g);
        emit.write(dump(j));
    } else {
        std::string text = csv_row({"k1_re", "k1_im", "k2_re", "k2_im", "lambda_re", "lambda_im", "x", "value_re",
                                    "value_im"});
        text += csv_row({format_double(k.k1().real()), format_double(k.k1().imag()), format_double(k.k2().real()),
                         format_double(k.k2().imag()), format_double(lambda), format_double(lambda_im),
                         format_double(x), format_double(g.real()), format_double(g.imag())});
        emit.write(text);
    }
    return kOk;
}

int cmd_apply(const Common& c, const KOptions& ko, bool dual, const std::string& function, double param,
              double point, std::ostream& out) {
    const Multiplicity k = ko.multiplicity();
    const TestFunction f = test_function_from_id(function, param);
    const EvalResult r = dual ? apply_Vt(k, f, point, c.quad) : apply_V(k, f, point, c.quad);
    const char* coord = dual ? "y" : "x";
    Emitter emit(c, out);
    if (c.format == Format::json) {
        ordered_json j;
        j["k1"] = param_json(k.k1());
        j["k2"] = param_json(k.k2());
        j["function"] = f.id();
        j[coord] = point;
        j["value"] = complex_json(r.value);
        j["est_error"] = r.est_error;
        j["quadrature"] = r.method;
        emit.write(dump(j));
    } else {
        std::string text = csv_row({"k1_re", "k1_im", "k2_re", "k2_im", "function", coord, "value_re", "value_im",
                                    "est_error"});
        text += csv_row({format_double(k.k1().real()), format_double(k.k1().imag()), format_double(k.k2().real()),
                         format_double(k.k2().imag()), f.id(), format_double(point), format_double(r.value.real()),
                         format_double(r.value.imag()), format_double(r.est_error)});
        emit.write(text);
    }
    return kOk;
}

int cmd_verify(const Common& c, const std::string& suite_text, std::optional<double> tol, std::ostream& out,
               std::ostream& err) {
    const std::optional<Suite> suite = parse_suite(suite_text);
    if (!suite) throw DomainError("unknown suite '" + suite_text + "'");
    if (tol && !(*tol > 0.0)) throw DomainError("--tol must be positive");
    NumericConfig cfg;
    cfg.quad = c.quad;
    const std::vector<CheckRow> rows = run_suite(*suite, cfg, tol);
    std::size_t failed = 0;
    for (const CheckRow& r : rows)
        if (!r.pass) ++failed;
    Emitter emit(c, out);
    if (c.format == Format::json) {
        ordered_json arr = ordered_json::array();
        for (const CheckRow& r : rows) {
            ordered_json j;
            j["check"] = r.check;
            j["point"] = r.point;
            j["lhs"] = complex_json(r.lhs);
            j["rhs"] = complex_json(r.rhs);
            j["gap"] = r.gap;
            j["tol"] = r.tol;
            j["pass"] = r.pass;
            arr.push_back(std::move(j));
        }
        emit.write(dump(arr));
    } else {
        std::string text =
            csv_row({"check", "point", "lhs_re", "lhs_im", "rhs_re", "rhs_im", "gap", "tol", "pass"});
        for (const CheckRow& r : rows) {
            text += csv_row({r.check, r.point, format_double(r.lhs.real()), format_double(r.lhs.imag()),
                             format_double(r.rhs.real()), format_double(r.rhs.imag()), format_double(r.gap),
                             format_double(r.tol), r.pass ? "true" : "false"});
        }
        emit.write(text);
    }
    err << suite_name(*suite) << ": " << rows.size() << " checks, " << failed << " failed\n";
    return failed == 0 ? kOk : kVerifyFailed;
}

struct ScanOptions {
    std::string k1;
    std::string k2;
    std::string x;
    std::string y_fraction;
};

int cmd_scan(const Common& c, const ScanOptions& so, std::ostream& out) {
    ScanGrid grid = default_scan_grid();
    if (!so.k1.empty()) grid.k1 = parse_axis(so.k1, "--k1");
    if (!so.k2.empty()) grid.k2 = parse_axis(so.k2, "--k2");
    if (!so.x.empty()) grid.x = parse_axis(so.x, "--x");
    if (!so.y_fraction.empty()) grid.y_fraction = parse_axis(so.y_fraction, "--y-fraction");
    const ScanReport report = positivity_scan(grid, c.quad);
    Emitter emit(c, out);
    if (c.format == Format::json) {
        ordered_json arr = ordered_json::array();
        for (const ScanCell& cell : report.cells) {
            ordered_json j;
            j["k1"] = cell.k1;
            j["k2"] = cell.k2;
            j["x"] = cell.x;
            j["y"] = cell.y;
            j["value"] = cell.value;
            arr.push_back(std::move(j));
        }
        ordered_json summary;
        summary["min_value"] = report.min_value;
        summary["argmin"] = report.argmin;
        summary["all_positive"] = report.all_positive;
        arr.push_back(std::move(summary));
        emit.write(dump(arr));
    } else {
        std::string text = csv_row({"k1", "k2", "x", "y", "value"});
        for (const ScanCell& cell : report.cells) {
            text += csv_row({format_double(cell.k1), format_double(cell.k2), format_double(cell.x),
                             format_double(cell.y), format_double(cell.value)});
        }
        text += "# min_value=" + format_double(report.min_value) + " argmin=" + std::to_string(report.argmin) +
                " all_positive=" + (report.all_positive ? "true" : "false") + "\n";
        emit.write(text);
    }
    return report.all_positive ? kOk : kVerifyFailed;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Trigonometric Dunkl intertwining operator in rank one", "trigdunkl"};
    app.require_subcommand(1);

    Common common;
    KOptions kopt;

    CLI::App* kernel = app.add_subcommand("kernel", "Evaluate the intertwining kernel K(x, y)");
    double kx = 0.0;
    double ky = 0.0;
    std::string method = "direct";
    add_k(*kernel, kopt);
    kernel->add_option("--x", kx, "x != 0")->required();
    kernel->add_option("--y", ky, "|y| < |x|")->required();
    kernel->add_option("--method", method, "direct (integral formula) or mourou (Jacobi-kernel assembly)")
        ->check(CLI::IsMember({"direct", "mourou"}))
        ->capture_default_str();
    add_common(*kernel, common);

    CLI::App* opdam = app.add_subcommand("opdam", "Evaluate the Opdam hypergeometric function G");
    double lambda = 0.0;
    double lambda_im = 0.0;
    double ox = 0.0;
    add_k(*opdam, kopt);
    opdam->add_option("--lambda", lambda, "Spectral parameter (real part)")->required();
    opdam->add_option("--lambda-im", lambda_im, "Imaginary part of the spectral parameter");
    opdam->add_option("--x", ox, "Point")->required();
    add_common(*opdam, common);

    std::string function;
    double fparam = 0.0;
    double apply_point = 0.0;
    CLI::App* apply_v = app.add_subcommand("apply-v", "Apply V to a registered test function at x");
    add_k(*apply_v, kopt);
    apply_v->add_option("--function", function, "one, plane-wave, monomial, gaussian, bump")->required();
    apply_v->add_option("--param", fparam, "Parameter of the test function (lambda, degree, centre, radius)");
    apply_v->add_option("--x", apply_point, "Point")->required();
    add_common(*apply_v, common);

    CLI::App* apply_vt = app.add_subcommand("apply-vt", "Apply tV to a compactly supported test function at y");
    add_k(*apply_vt, kopt);
    apply_vt->add_option("--function", function, "A test function with compact support (bump)")->required();
    apply_vt->add_option("--param", fparam, "Parameter of the test function");
    apply_vt->add_option("--y", apply_point, "Point")->required();
    add_common(*apply_vt, common);

    CLI::App* verify = app.add_subcommand("verify", "Run a verification suite over the built-in grids");
    std::string suite = "all";
    std::optional<double> tol;
    verify
        ->add_option("--suite", suite,
                     "all, eigen, duality, intertwine, kernel-consistency, positivity, limits, cherednik, delta0, "
                     "quadrature")
        ->capture_default_str();
    verify->add_option("--tol", tol, "Replace the tolerance of every row");
    add_common(*verify, common);

    CLI::App* scan = app.add_subcommand("scan", "Positivity scan of the kernel; CSV k1,k2,x,y,value");
    ScanOptions so;
    scan->add_option("--k1", so.k1, "lo:hi:count or a comma list (default 0.3,0.7,1.5)");
    scan->add_option("--k2", so.k2, "lo:hi:count or a comma list (default 0.3,0.7,1.5)");
    scan->add_option("--x", so.x, "lo:hi:count or a comma list (default +-0.6, +-1.3, +-2.4)");
    scan->add_option("--y-fraction", so.y_fraction, "y / |x| values in (-1, 1)");
    add_common(*scan, common);

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return kOk;
    } catch (const CLI::CallForAllHelp&) {
        out << app.help("", CLI::AppFormatMode::All);
        return kOk;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << "\n";
        return kBadArguments;
    }
    try {
        check_quadrature(common.quad);
        if (kernel->parsed()) return cmd_kernel(common, kopt, kx, ky, method, out);
        if (opdam->parsed()) return cmd_opdam(common, kopt, lambda, lambda_im, ox, out);
        if (apply_v->parsed()) return cmd_apply(common, kopt, false, function, fparam, apply_point, out);
        if (apply_vt->parsed()) return cmd_apply(common, kopt, true, function, fparam, apply_point, out);
        if (verify->parsed()) return cmd_verify(common, suite, tol, out, err);
        if (scan->parsed()) {
            // the scan report defaults to CSV
            if (scan->get_option("--format")->count() == 0) common.format = Format::csv;
            return cmd_scan(common, so, out);
        }
    } catch (const DomainError& e) {
        err << "error: " << e.what() << "\n";
        return kBadArguments;
    } catch (const ContractError& e) {
        err << "error: " << e.what() << "\n";
        return kBadArguments;
    } catch (const NonConvergenceError& e) {
        err << "error: " << e.what() << " (best value " << format_double(e.partial().real()) << "+"
            << format_double(e.partial().imag()) << "i, estimated error " << format_double(e.est_error()) << ")\n";
        return kNumericalFailure;
    } catch (const EvaluationError& e) {
        err << "error: " << e.what() << "\n";
        return kNumericalFailure;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return kNumericalFailure;
    }
    err << "error: no subcommand\n";
    return kBadArguments;
}

}  // namespace trigdunkl::cli
