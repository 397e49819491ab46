// gammaprod: evaluate ln Gamma at rationals, verify the Gamma product
// identities over parameter ranges, and print arithmetic tables.

#include "gammaprod/gammaprod.hpp"
#include "gammaprod/report.hpp"

#include <CLI11.hpp>

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <thread>
#include <vector>

namespace {

using namespace gammaprod;

enum ExitCode : int { kPass = 0, kFail = 1, kUsage = 2, kDomain = 3 };

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct PrecisionOptions {
    std::optional<int> prec;
    std::optional<int> digits;

    void attach(CLI::App& cmd) {
        auto* p = cmd.add_option("--prec", prec, "Working precision in bits (>= 64)");
        auto* d = cmd.add_option("--digits", digits, "Decimal digits; bits = ceil(digits * 3.3219) + 16");
        p->excludes(d);
    }

    PrecisionContext resolve() const {
        try {
            if (prec) return PrecisionContext(*prec);
            if (digits) return PrecisionContext::from_digits(*digits);
            if (const char* env = std::getenv("GAMMAPROD_PREC")) {
                std::size_t used = 0;
                const int bits = std::stoi(env, &used);
                if (used != std::string(env).size()) throw std::invalid_argument("trailing characters");
                return PrecisionContext(bits);
            }
        } catch (const std::exception& e) {
            throw UsageError(std::string("invalid precision: ") + e.what());
        }
        return PrecisionContext{};
    }
};

// ---------------------------------------------------------------- eval

struct EvalConfig {
    std::string argument;
    PrecisionOptions precision;
};

int cmd_eval(const EvalConfig& cfg) {
    Rational r;
    try {
        r = Rational::parse(cfg.argument);
    } catch (const std::invalid_argument& e) {
        throw UsageError(e.what());
    }
    const PrecisionContext ctx = cfg.precision.resolve();
    const int digits = cfg.precision.digits ? *cfg.precision.digits : ctx.decimal_digits();
    if (r.sign() <= 0) {
        std::cerr << "gammaprod: eval: argument must be positive, got " << r << '\n';
        return kDomain;
    }

    const BigFloat lg = lngamma_rational(r, ctx);
    std::cout << "lngamma(" << r << ") = " << lg.to_string(digits) << '\n';

    // exp(lg) is representable while lg / ln 2 stays below the exponent limit.
    const BigFloat log2_gamma = lg / constants::log_two(ctx.working_bits());
    if (log2_gamma < BigFloat(static_cast<long>(mpfr_get_emax()) - 2, 64)) {
        std::cout << "gamma(" << r << ")   = " << exp(lg).to_string(digits) << '\n';
    } else {
        std::cout << "gamma(" << r << ") exceeds the floating-point exponent range; logarithm only\n";
    }
    return kPass;
}

// ---------------------------------------------------------------- verify

struct VerifyConfig {
    std::string identity;
    std::int64_t n_min = 1;
    std::int64_t n_max = 32;
    std::int64_t order = 32;
    PrecisionOptions precision;
    std::string format = "text";
    std::string out_path;
    unsigned jobs = std::max(1u, std::thread::hardware_concurrency());
};

std::vector<IdentityId> selected_identities(const std::string& name) {
    if (name == "all") return {kIdentityCatalog.begin(), kIdentityCatalog.end()};
    if (name == "theorem1") return {IdentityId::theorem1_direct};
    if (auto id = parse_identity(name)) return {*id};
    throw UsageError("unknown identity '" + name + "'");
}

std::vector<CheckTask> plan_verify(const VerifyConfig& cfg) {
    if (cfg.n_min > cfg.n_max) throw UsageError("--n-min exceeds --n-max");
    const auto ids = selected_identities(cfg.identity);
    const bool single = ids.size() == 1;
    std::vector<CheckTask> tasks;
    for (IdentityId id : ids) {
        const auto dom = parameter_domain(id);
        const std::int64_t hi = dom.kind == ParameterKind::order ? cfg.order : cfg.n_max;
        const char* flag = dom.kind == ParameterKind::order ? "--N" : "--n-max";
        if (hi < dom.min)
            throw UsageError(std::string(to_string(id)) + ": " + flag + " must be at least " + std::to_string(dom.min));
        if (single && hi > dom.max)
            throw UsageError(std::string(to_string(id)) + ": " + flag + " must be at most " + std::to_string(dom.max));
        auto part = tasks_for_range(id, cfg.n_min, hi);
        tasks.insert(tasks.end(), part.begin(), part.end());
    }
    if (tasks.empty()) throw UsageError("empty parameter range");
    return tasks;
}

int cmd_verify(const VerifyConfig& cfg) {
    ReportFormat format;
    try {
        format = parse_format(cfg.format);
    } catch (const std::invalid_argument& e) {
        throw UsageError(e.what());
    }
    if (cfg.jobs < 1) throw UsageError("--jobs must be positive");
    const PrecisionContext ctx = cfg.precision.resolve();
    const auto tasks = plan_verify(cfg);
    const auto records = run_batch(tasks, ctx, cfg.jobs);

    if (cfg.out_path.empty()) {
        write_records(std::cout, records, format);
    } else {
        std::ofstream out(cfg.out_path);
        if (!out) throw UsageError("cannot open '" + cfg.out_path + "' for writing");
        write_records(out, records, format);
    }
    const auto failed = std::count_if(records.begin(), records.end(), [](const auto& r) { return !r.pass; });
    std::cerr << records.size() << " records, " << failed << " failed\n";
    return failed == 0 ? kPass : kFail;
}

// ---------------------------------------------------------------- table

struct TableConfig {
    std::string kind;
    std::int64_t n_min = 1;
    std::optional<std::int64_t> n_max;
    std::optional<std::int64_t> order;
    std::string format = "text";
    int digits = 20;
};

void emit_row(std::ostream& os, ReportFormat format, const std::vector<std::string>& header,
              const std::vector<std::string>& row) {
    switch (format) {
    case ReportFormat::json: {
        nlohmann::ordered_json j;
        for (std::size_t i = 0; i < header.size(); ++i) j[header[i]] = row[i];
        os << j.dump() << '\n';
        break;
    }
    case ReportFormat::csv:
    case ReportFormat::text: {
        const char sep = format == ReportFormat::csv ? ',' : ' ';
        for (std::size_t i = 0; i < row.size(); ++i) os << (i ? std::string(1, sep) : "") << row[i];
        os << '\n';
        break;
    }
    }
}

int cmd_table(const TableConfig& cfg) {
    ReportFormat format;
    try {
        format = parse_format(cfg.format);
    } catch (const std::invalid_argument& e) {
        throw UsageError(e.what());
    }
    auto& os = std::cout;

    if (cfg.kind == "farey") {
        if (!cfg.order) throw UsageError("table farey requires --N");
        if (*cfg.order < 2 || *cfg.order > 2000) throw UsageError("table farey: --N must lie in [2, 2000]");
        const std::vector<std::string> header{"index", "fraction"};
        if (format == ReportFormat::csv) emit_row(os, format, header, header);
        std::int64_t index = 0;
        for_each_farey(*cfg.order, [&](std::int64_t num, std::int64_t den) {
            emit_row(os, format, header, {std::to_string(++index), std::to_string(num) + "/" + std::to_string(den)});
        });
        return kPass;
    }

    if (!cfg.n_max) throw UsageError("table " + cfg.kind + " requires --n-max");
    const std::int64_t hi = *cfg.n_max;
    const std::int64_t lo = std::max<std::int64_t>(cfg.n_min, 1);
    if (lo > hi) throw UsageError("--n-min exceeds --n-max");

    if (cfg.kind == "cyclotomic") {
        if (hi > kCyclotomicBound) throw UsageError("table cyclotomic: --n-max must be at most 10000");
        const std::vector<std::string> header{"n", "phi_n"};
        if (format == ReportFormat::csv) emit_row(os, format, header, header);
        for (std::int64_t n = lo; n <= hi; ++n) emit_row(os, format, header, {std::to_string(n), cyclotomic_poly(n).to_string()});
        return kPass;
    }

    if (cfg.kind != "phi" && cfg.kind != "mu" && cfg.kind != "lambda")
        throw UsageError("unknown table kind '" + cfg.kind + "' (expected phi, mu, lambda, cyclotomic or farey)");
    if (hi > ArithmeticFunctionTable::kMaxSize) throw UsageError("--n-max must be at most 1000000");
    if (cfg.digits < 1) throw UsageError("--digits must be positive");

    const ArithmeticFunctionTable table(hi);
    const PrecisionContext ctx = PrecisionContext::from_digits(cfg.digits);
    std::vector<std::string> header{"n", cfg.kind};
    if (cfg.kind == "lambda") header.push_back("decimal");
    if (format == ReportFormat::csv) emit_row(os, format, header, header);
    for (std::int64_t n = lo; n <= hi; ++n) {
        if (cfg.kind == "phi") {
            emit_row(os, format, header, {std::to_string(n), std::to_string(table.phi(n))});
        } else if (cfg.kind == "mu") {
            emit_row(os, format, header, {std::to_string(n), std::to_string(table.mu(n))});
        } else {
            const LogVector& lambda = table.mangoldt(n);
            emit_row(os, format, header,
                     {std::to_string(n), lambda.to_string(), lambda.to_bigfloat(ctx.working_bits()).to_string(cfg.digits)});
        }
    }
    return kPass;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"High-precision Gamma products at rationals with a common denominator"};
    app.require_subcommand(1);

    EvalConfig eval_cfg;
    auto* eval = app.add_subcommand("eval", "Print ln Gamma(r) and Gamma(r) for a positive rational r");
    eval->add_option("rational", eval_cfg.argument, "k/n or k")->required();
    eval_cfg.precision.attach(*eval);

    VerifyConfig verify_cfg;
    auto* verify = app.add_subcommand("verify", "Verify catalog identities over a parameter range");
    verify->add_option("identity", verify_cfg.identity, "Catalog id, 'theorem1' or 'all'")->required();
    verify->add_option("--n-min", verify_cfg.n_min, "Smallest parameter");
    verify->add_option("--n-max", verify_cfg.n_max, "Largest denominator n");
    verify->add_option("--N", verify_cfg.order, "Largest Farey order N");
    verify_cfg.precision.attach(*verify);
    verify->add_option("--format", verify_cfg.format, "json, csv or text");
    verify->add_option("--out", verify_cfg.out_path, "Write the report here instead of stdout");
    verify->add_option("--jobs", verify_cfg.jobs, "Worker threads");

    TableConfig table_cfg;
    auto* table = app.add_subcommand("table", "Print phi, mu, lambda, cyclotomic or farey tables");
    table->add_option("kind", table_cfg.kind, "phi | mu | lambda | cyclotomic | farey")->required();
    table->add_option("--n-min", table_cfg.n_min, "First row");
    table->add_option("--n-max", table_cfg.n_max, "Last row");
    table->add_option("--N", table_cfg.order, "Farey order");
    table->add_option("--format", table_cfg.format, "json, csv or text");
    table->add_option("--digits", table_cfg.digits, "Decimal digits for lambda");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? kPass : kUsage;
    }

    try {
        if (*eval) return cmd_eval(eval_cfg);
        if (*verify) return cmd_verify(verify_cfg);
        return cmd_table(table_cfg);
    } catch (const UsageError& e) {
        std::cerr << "gammaprod: " << e.what() << '\n';
        return kUsage;
    } catch (const std::domain_error& e) {
        std::cerr << "gammaprod: " << e.what() << '\n';
        return kDomain;
    } catch (const std::invalid_argument& e) {
        std::cerr << "gammaprod: " << e.what() << '\n';
        return kUsage;
    }
}
