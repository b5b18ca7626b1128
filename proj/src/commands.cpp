#include "hamrank/commands.hpp"

#include "hamrank/bounds.hpp"
#include "hamrank/protocol.hpp"
#include "hamrank/verify.hpp"
#include "hamrank/zeros.hpp"

#include <json.hpp>

#include <algorithm>
#include <fstream>
#include <sstream>

namespace hamrank {

using Json = nlohmann::ordered_json;

std::string_view to_string(Format format) {
    switch (format) {
        case Format::json: return "json";
        case Format::csv: return "csv";
        default: return "text";
    }
}

Format parse_format(std::string_view text) {
    if (text == "json") return Format::json;
    if (text == "csv") return Format::csv;
    if (text == "text") return Format::text;
    throw std::invalid_argument("unknown format '" + std::string(text) + "' (expected json|csv|text)");
}

namespace {

constexpr int kDefaultSweepN = 20;

// Head fields plus one table. JSON nests the table under `table_key`; CSV and
// text print the head as comment/key lines followed by the table rows.
struct Document {
    Json head = Json::object();
    std::string table_key;
    Json table = Json::array();
};

Json config_json(const RunConfig& c) {
    Json j;
    j["command"] = c.command;
    j["target"] = c.target;
    j["n"] = c.n;
    j["a"] = c.a;
    j["mode"] = to_string(c.mode);
    j["max_n"] = c.max_n;
    j["seed"] = std::to_string(c.seed);
    j["oracle"] = to_string(c.oracle);
    j["format"] = to_string(c.format);
    j["in"] = c.in_path;
    j["out"] = c.out_path;
    return j;
}

Document start(const RunConfig& c) {
    Document d;
    d.head["command"] = c.command;
    d.head["config"] = config_json(c);
    return d;
}

std::string scalar_text(const Json& v) {
    if (v.is_string()) return v.get<std::string>();
    if (v.is_null()) return "";
    return v.dump();
}

std::string csv_cell(const Json& v) {
    std::string s = scalar_text(v);
    if (s.find_first_of(",\"\n") == std::string::npos) return s;
    std::string q = "\"";
    for (char ch : s) {
        if (ch == '"') q += '"';
        q += ch;
    }
    return q + "\"";
}

std::vector<std::string> table_columns(const Json& table) {
    std::vector<std::string> cols;
    for (const auto& row : table)
        for (const auto& [k, _] : row.items())
            if (std::find(cols.begin(), cols.end(), k) == cols.end()) cols.push_back(k);
    return cols;
}

std::string render(const Document& d, Format format) {
    if (format == Format::json) {
        Json out = d.head;
        if (!d.table_key.empty()) out[d.table_key] = d.table;
        return out.dump(2) + "\n";
    }
    std::ostringstream os;
    const auto cols = table_columns(d.table);
    if (format == Format::csv) {
        for (const auto& [k, v] : d.head.items()) os << "# " << k << ": " << scalar_text(v) << "\n";
        for (std::size_t i = 0; i < cols.size(); ++i) os << (i ? "," : "") << cols[i];
        if (!cols.empty()) os << "\n";
        for (const auto& row : d.table) {
            for (std::size_t i = 0; i < cols.size(); ++i) os << (i ? "," : "") << (row.contains(cols[i]) ? csv_cell(row[cols[i]]) : "");
            os << "\n";
        }
        return os.str();
    }
    for (const auto& [k, v] : d.head.items()) os << k << ": " << scalar_text(v) << "\n";
    if (cols.empty()) return os.str();
    std::vector<std::size_t> width(cols.size());
    for (std::size_t i = 0; i < cols.size(); ++i) {
        width[i] = cols[i].size();
        for (const auto& row : d.table)
            if (row.contains(cols[i])) width[i] = std::max(width[i], scalar_text(row[cols[i]]).size());
    }
    const auto line = [&](const auto& cell) {
        std::string s;
        for (std::size_t i = 0; i < cols.size(); ++i) {
            std::string c = cell(i);
            if (i + 1 < cols.size()) c.resize(width[i], ' ');
            s += (i ? "  " : "") + c;
        }
        return s + "\n";
    };
    os << "\n" << d.table_key << ":\n";
    os << line([&](std::size_t i) { return cols[i]; });
    for (const auto& row : d.table)
        os << line([&](std::size_t i) { return row.contains(cols[i]) ? scalar_text(row[cols[i]]) : std::string(); });
    return os.str();
}

HammingInstance instance_of(const RunConfig& c) { return HammingInstance::make(c.n, c.a, c.mode); }

void put_instance(Document& d, const HammingInstance& inst) {
    d.head["n"] = inst.n;
    d.head["a"] = inst.a;
    d.head["mode"] = to_string(inst.mode);
}

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("cannot open '" + path + "' for reading");
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

void write_file(const std::string& path, const std::string& text) {
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out || !(out << text)) throw std::runtime_error("cannot write '" + path + "'");
}

CommandResult cmd_spectrum(const RunConfig& c) {
    const SpectrumTable table(instance_of(c));
    Document d = start(c);
    put_instance(d, table.instance());
    d.head["rank"] = to_decimal(table.rank());
    d.head["zero_weights"] = table.zero_weights();
    d.table_key = "rows";
    for (const auto& row : table.rows())
        d.table.push_back({{"m", row.m},
                           {"eigenvalue", to_decimal(row.eigenvalue)},
                           {"multiplicity", to_decimal(row.multiplicity)},
                           {"is_zero", row.is_zero}});
    return {Outcome::success, render(d, c.format)};
}

CommandResult cmd_bounds(const RunConfig& c) {
    const BoundsReport b = log_rank_bounds(instance_of(c));
    Document d = start(c);
    put_instance(d, b.instance);
    d.head["rank"] = to_decimal(b.rank);
    d.head["d_lower"] = b.d_lower;
    d.head["cstar_lower"] = b.cstar_lower;
    d.head["qstar_lower"] = b.qstar_lower;
    d.head["theorem_flags"] = {{"general_n_minus_2", b.theorem_flags.general_n_minus_2},
                               {"small_a_applies", b.theorem_flags.small_a_applies},
                               {"small_a_full_n", b.theorem_flags.small_a_full_n}};
    if (b.complement) {
        const auto& r = *b.complement;
        d.head["complement"] = {{"a", r.reduced.a},
                                {"mode", to_string(r.reduced.mode)},
                                {"relation", to_string(r.relation)},
                                {"note", "a=" + std::to_string(b.instance.a) + " reduces to a=" + std::to_string(r.reduced.a) +
                                             " (" + std::string(to_string(r.relation)) + ")"}};
    } else {
        d.head["complement"] = nullptr;
    }
    return {Outcome::success, render(d, c.format)};
}

CommandResult cmd_rank(const RunConfig& c) {
    const RankReport r = rank_report(instance_of(c), c.seed, c.oracle);
    Document d = start(c);
    put_instance(d, r.instance);
    d.head["formula_rank"] = to_decimal(r.formula_rank);
    d.head["seed"] = std::to_string(r.seed);
    d.head["agree"] = r.agree;
    d.table_key = "oracles";
    for (std::size_t i = 0; i < r.primes.size(); ++i)
        d.table.push_back({{"oracle", "modp"}, {"prime", std::to_string(r.primes[i])}, {"rank", r.oracle_rank_modp[i]}});
    if (r.oracle_rank_exact) d.table.push_back({{"oracle", "exact"}, {"prime", nullptr}, {"rank", *r.oracle_rank_exact}});
    return {r.agree ? Outcome::success : Outcome::property_failed, render(d, c.format)};
}

CommandResult cmd_verify(const RunConfig& c) {
    const VerifyGroup group = parse_verify_group(c.target.empty() ? "all" : c.target);
    const VerifyReport r = run_verification(group, c.max_n, c.seed);
    Document d = start(c);
    d.head["group"] = to_string(r.group);
    d.head["max_n"] = r.max_n;
    d.head["all_pass"] = r.all_pass();
    d.table_key = "properties";
    for (const auto& p : r.properties)
        d.table.push_back({{"name", p.name},
                           {"range", p.range},
                           {"pass", p.pass},
                           {"checked", p.checked},
                           {"counterexample", p.counterexample ? Json(*p.counterexample) : Json(nullptr)},
                           {"note", p.note}});
    return {r.all_pass() ? Outcome::success : Outcome::property_failed, render(d, c.format)};
}

CommandResult cmd_export(const RunConfig& c) {
    const BitMatrix mat = BitMatrix::build(instance_of(c));
    const std::string body = mat.to_text();
    if (c.out_path.empty()) return {Outcome::success, body};
    write_file(c.out_path, body);
    Document d = start(c);
    put_instance(d, instance_of(c));
    d.head["out"] = c.out_path;
    d.head["rows"] = mat.dim();
    return {Outcome::success, render(d, c.format)};
}

CommandResult cmd_dcc(const RunConfig& c) {
    SandwichReport s;
    if (c.in_path.empty()) {
        s = sandwich_report(instance_of(c));
    } else {
        s = sandwich_report(BitMatrix::parse(read_file(c.in_path)));
    }
    Document d = start(c);
    put_instance(d, s.instance);
    d.head["lower"] = s.lower;
    d.head["exact"] = s.exact;
    d.head["upper"] = s.upper;
    d.head["holds"] = s.holds;
    d.head["reaches_n_plus_1"] = s.exact == s.upper;
    return {s.holds ? Outcome::success : Outcome::property_failed, render(d, c.format)};
}

CommandResult cmd_sweep(const RunConfig& c) {
    const std::string kind = c.target.empty() ? "conjecture" : c.target;
    const int max_n = c.max_n == 0 ? kDefaultSweepN : c.max_n;
    Document d = start(c);
    d.head["kind"] = kind;
    d.head["max_n"] = max_n;
    bool clean = true;
    if (kind == "conjecture") {
        d.table_key = "rows";
        for (const auto& row : conjecture_sweep(max_n)) {
            d.table.push_back({{"n", row.n},
                               {"a", row.a},
                               {"mode", to_string(row.mode)},
                               {"rank", to_decimal(row.rank)},
                               {"log_rank_bound", row.log_rank_bound},
                               {"target", row.target},
                               {"gap", row.target - row.log_rank_bound}});
        }
        d.head["note"] = "log-rank evidence only; the bound never exceeds n, so n+1 needs protocol-level arguments";
    } else if (kind == "census") {
        if (max_n > kMaxSweepN) throw LimitError("census: max-n must be <= " + std::to_string(kMaxSweepN));
        Json violations = Json::array();
        d.table_key = "zeros";
        for (int n = 1; n <= max_n; ++n)
            for (Mode mode : {Mode::threshold, Mode::exact}) {
                const ZeroCensus z = census(n, mode);
                for (const auto& e : z.entries)
                    d.table.push_back({{"n", n}, {"mode", to_string(mode)}, {"a", e.a}, {"m", e.m}});
                for (const auto& v : z.violations) violations.push_back("n=" + std::to_string(n) + " " + std::string(to_string(mode)) + " " + v);
            }
        clean = violations.empty();
        d.head["violations"] = violations;
    } else {
        throw std::invalid_argument("unknown sweep kind '" + kind + "' (expected conjecture|census)");
    }
    return {clean ? Outcome::success : Outcome::property_failed, render(d, c.format)};
}

}  // namespace

CommandResult run_command(const RunConfig& config) {
    if (config.command == "spectrum") return cmd_spectrum(config);
    if (config.command == "bounds") return cmd_bounds(config);
    if (config.command == "rank") return cmd_rank(config);
    if (config.command == "verify") return cmd_verify(config);
    if (config.command == "export") return cmd_export(config);
    if (config.command == "dcc") return cmd_dcc(config);
    if (config.command == "sweep") return cmd_sweep(config);
    throw std::invalid_argument("unknown command '" + config.command + "'");
}

}  // namespace hamrank
