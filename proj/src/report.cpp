#include "fano/report.hpp"

#include <algorithm>
#include <functional>
#include <sstream>

#include "json.hpp"

namespace fano {

namespace {

using Json = nlohmann::ordered_json;

std::string bool_str(bool b) { return b ? "true" : "false"; }

std::string opt_rational_str(const std::optional<Rational>& r) {
    return r ? to_string(*r) : "-";
}

std::string opt_bool_str(const std::optional<bool>& b) {
    return b ? bool_str(*b) : "-";
}

// ---- sweep enumeration -------------------------------------------------------

// Weakly decreasing r-tuples over [2, d_max], ascending lexicographic.
void each_degree_tuple(int r, int d_max, const std::function<void(const std::vector<int>&)>& f) {
    std::vector<int> tuple;
    std::function<void(int, int)> rec = [&](int depth, int hi) {
        if (depth == r) {
            f(tuple);
            return;
        }
        for (int d = 2; d <= hi; ++d) {
            tuple.push_back(d);
            rec(depth + 1, d);
            tuple.pop_back();
        }
    };
    if (d_max >= 2) rec(0, d_max);
}

// Weakly increasing weight tuples of the given length over [1, w_max].
void each_weight_tuple(int length, int w_max,
                       const std::function<void(const std::vector<int>&)>& f) {
    std::vector<int> tuple;
    std::function<void(int, int)> rec = [&](int depth, int lo) {
        if (depth == length) {
            f(tuple);
            return;
        }
        for (int w = lo; w <= w_max; ++w) {
            tuple.push_back(w);
            rec(depth + 1, w);
            tuple.pop_back();
        }
    };
    rec(0, 1);
}

void enumerate_specs(const SweepConfig& cfg, const std::function<void(std::string)>& emit) {
    switch (cfg.family) {
    case Family::complete_intersection:
        for (int n = 2; n <= cfg.n_max; ++n) {
            each_weight_tuple(n + 1, cfg.w_max, [&](const std::vector<int>& w) {
                bool trivial = std::all_of(w.begin(), w.end(), [](int x) { return x == 1; });
                std::string prefix = "ci n=" + std::to_string(n);
                if (!trivial) {
                    prefix += " w=";
                    for (std::size_t i = 0; i < w.size(); ++i)
                        prefix += (i ? "," : "") + std::to_string(w[i]);
                }
                for (int r = 1; r <= std::min(cfg.r_max, n - 1); ++r) {
                    each_degree_tuple(r, cfg.d_max, [&](const std::vector<int>& d) {
                        std::string text = prefix + " d=";
                        for (std::size_t i = 0; i < d.size(); ++i)
                            text += (i ? "," : "") + std::to_string(d[i]);
                        emit(std::move(text));
                    });
                }
            });
        }
        break;
    case Family::grassmannian:
        for (int k = 1; k <= cfg.k_max; ++k)
            for (int n = 2 * k; n <= cfg.n_max; ++n)
                emit("grass k=" + std::to_string(k) + " n=" + std::to_string(n));
        break;
    case Family::product:
        for (int a = 1; a <= cfg.n_max; ++a)
            for (int b = 1; b <= cfg.n_max; ++b)
                emit("product (ci n=" + std::to_string(a) + ") (ci n=" + std::to_string(b) + ")");
        break;
    case Family::p1_bundle:
        for (int n = 1; n <= cfg.n_max; ++n)
            for (int m = 0; m <= cfg.d_max; ++m)
                emit("bundle base=(ci n=" + std::to_string(n) + ") c1L=" + std::to_string(m));
        break;
    }
}

Integer case_count(const SweepConfig& cfg) {
    Integer count = 0;
    switch (cfg.family) {
    case Family::complete_intersection:
        for (int n = 2; n <= cfg.n_max; ++n) {
            Integer weights = binomial(cfg.w_max + n, n + 1);
            Integer tuples = 0;
            for (int r = 1; r <= std::min(cfg.r_max, n - 1); ++r)
                tuples += cfg.d_max >= 2 ? binomial(cfg.d_max - 2 + r, r) : Integer(0);
            count += weights * tuples;
        }
        break;
    case Family::grassmannian:
        for (int k = 1; k <= cfg.k_max; ++k)
            if (cfg.n_max >= 2 * k) count += cfg.n_max - 2 * k + 1;
        break;
    case Family::product:
        count = Integer(cfg.n_max) * cfg.n_max;
        break;
    case Family::p1_bundle:
        count = Integer(cfg.n_max) * (cfg.d_max + 1);
        break;
    }
    return count;
}

// ---- csv helpers -------------------------------------------------------------

std::string csv_quote(const std::string& field) {
    if (field.find_first_of(",\"\n") == std::string::npos) return field;
    std::string out = "\"";
    for (char c : field) {
        if (c == '"') out += '"';
        out += c;
    }
    out += "\"";
    return out;
}

std::vector<std::string> csv_split(const std::string& line) {
    std::vector<std::string> fields;
    std::string cur;
    bool quoted = false;
    for (std::size_t i = 0; i < line.size(); ++i) {
        char c = line[i];
        if (quoted) {
            if (c == '"') {
                if (i + 1 < line.size() && line[i + 1] == '"') {
                    cur += '"';
                    ++i;
                } else {
                    quoted = false;
                }
            } else {
                cur += c;
            }
        } else if (c == '"') {
            quoted = true;
        } else if (c == ',') {
            fields.push_back(std::move(cur));
            cur.clear();
        } else {
            cur += c;
        }
    }
    fields.push_back(std::move(cur));
    return fields;
}

bool parse_bool(const std::string& s, const char* what) {
    if (s == "true") return true;
    if (s == "false") return false;
    throw PreconditionError(std::string("malformed ") + what + " field '" + s + "'");
}

constexpr const char* kCsvHeader = "spec,dim,fano,fano_index,two_fano,ch2_strict,boundary_flag,oracle,agree";

} // namespace

ReportRow run_classify(const std::string& spec_text) {
    SpecNode node = parse_spec(spec_text);
    Space X = build_space(node);
    ClassificationRecord rec = classify(X);

    ReportRow row;
    row.spec = canonical_text(node);
    row.dim = X.dimension;
    row.fano = rec.is_fano;
    row.fano_index = rec.fano_index;
    row.two_fano = rec.is_two_fano;
    row.ch2_strict = rec.is_ch2_strictly_positive;
    row.boundary = rec.boundary_flag;
    row.oracle = oracle_two_fano(node);
    row.agree = !row.oracle || *row.oracle == row.two_fano;
    row.witnesses = rec.witness_pairings;
    return row;
}

SweepSummary summarize(const std::vector<ReportRow>& rows) {
    SweepSummary s;
    s.rows = rows.size();
    for (const auto& r : rows) {
        if (r.fano) ++s.fano;
        if (r.two_fano) ++s.two_fano;
        if (r.boundary) ++s.boundary;
        if (r.oracle) {
            ++s.oracle_defined;
            if (r.agree) ++s.oracle_agree;
        }
    }
    return s;
}

SweepResult run_sweep(const SweepConfig& config) {
    Integer count = case_count(config);
    if (count > config.cap)
        throw SweepCapError(static_cast<std::size_t>(count), config.cap);

    SweepResult result;
    enumerate_specs(config, [&](std::string text) {
        ReportRow row = run_classify(text);
        if (!config.boundary_only || row.boundary) result.rows.push_back(std::move(row));
    });
    result.summary = summarize(result.rows);
    return result;
}

Lemma3Report run_lemma3(const Lemma3Input& input) {
    Lemma3Report rep;
    rep.bound = lemma3_bound(input); // validates the input
    rep.ch2_term = input.ch2_deg;
    rep.c1sq_term = input.c1sq_deg / (2 * input.e);
    rep.defect_term =
        Rational(input.e + input.dim_x - 3) * Rational(1 - input.genus - input.marked);
    return rep;
}

// ---- renderers ---------------------------------------------------------------

std::string render_table(const std::vector<ReportRow>& rows, const SweepSummary& summary,
                         bool verbose) {
    const std::vector<std::string> header = {"spec",       "dim",    "fano",
                                             "fano_index", "two_fano", "ch2_strict",
                                             "boundary",   "oracle", "agree"};
    std::vector<std::vector<std::string>> cells;
    for (const auto& r : rows)
        cells.push_back({r.spec, std::to_string(r.dim), bool_str(r.fano),
                         opt_rational_str(r.fano_index), bool_str(r.two_fano),
                         bool_str(r.ch2_strict), bool_str(r.boundary), opt_bool_str(r.oracle),
                         bool_str(r.agree)});

    std::vector<std::size_t> width(header.size());
    for (std::size_t c = 0; c < header.size(); ++c) {
        width[c] = header[c].size();
        for (const auto& row : cells) width[c] = std::max(width[c], row[c].size());
    }
    std::ostringstream out;
    auto line = [&](const std::vector<std::string>& row) {
        for (std::size_t c = 0; c < row.size(); ++c) {
            out << row[c];
            if (c + 1 < row.size()) out << std::string(width[c] - row[c].size() + 2, ' ');
        }
        out << "\n";
    };
    line(header);
    for (std::size_t i = 0; i < cells.size(); ++i) {
        line(cells[i]);
        if (verbose)
            for (const auto& w : rows[i].witnesses)
                out << "    " << w.generator << " = " << to_string(w.value) << "\n";
    }
    out << "rows=" << summary.rows << " fano=" << summary.fano << " two_fano=" << summary.two_fano
        << " boundary=" << summary.boundary << " oracle_defined=" << summary.oracle_defined
        << " oracle_agree=" << summary.oracle_agree << "\n";
    return out.str();
}

std::string render_csv(const std::vector<ReportRow>& rows, const SweepSummary& summary) {
    std::ostringstream out;
    out << kCsvHeader << "\n";
    for (const auto& r : rows) {
        out << csv_quote(r.spec) << "," << r.dim << "," << bool_str(r.fano) << ","
            << opt_rational_str(r.fano_index) << "," << bool_str(r.two_fano) << ","
            << bool_str(r.ch2_strict) << "," << bool_str(r.boundary) << ","
            << opt_bool_str(r.oracle) << "," << bool_str(r.agree) << "\n";
    }
    out << "# rows=" << summary.rows << " fano=" << summary.fano
        << " two_fano=" << summary.two_fano << " boundary=" << summary.boundary
        << " oracle_defined=" << summary.oracle_defined
        << " oracle_agree=" << summary.oracle_agree << "\n";
    return out.str();
}

std::string render_json(const std::vector<ReportRow>& rows, const SweepSummary& summary,
                        bool verbose) {
    Json doc;
    doc["rows"] = Json::array();
    for (const auto& r : rows) {
        Json row;
        row["spec"] = r.spec;
        row["dim"] = r.dim;
        row["fano"] = r.fano;
        row["fano_index"] = r.fano_index ? Json(to_string(*r.fano_index)) : Json(nullptr);
        row["two_fano"] = r.two_fano;
        row["ch2_strict"] = r.ch2_strict;
        row["boundary_flag"] = r.boundary;
        row["oracle"] = r.oracle ? Json(*r.oracle) : Json(nullptr);
        row["agree"] = r.agree;
        if (verbose) {
            Json ws = Json::array();
            for (const auto& w : r.witnesses)
                ws.push_back(Json{{"generator", w.generator}, {"value", to_string(w.value)}});
            row["witnesses"] = std::move(ws);
        }
        doc["rows"].push_back(std::move(row));
    }
    doc["summary"] = Json{{"rows", summary.rows},
                          {"fano", summary.fano},
                          {"two_fano", summary.two_fano},
                          {"boundary", summary.boundary},
                          {"oracle_defined", summary.oracle_defined},
                          {"oracle_agree", summary.oracle_agree}};
    return doc.dump(2) + "\n";
}

std::string render(const SweepResult& result, OutputFormat format, bool verbose) {
    switch (format) {
    case OutputFormat::table:
        return render_table(result.rows, result.summary, verbose);
    case OutputFormat::csv:
        return render_csv(result.rows, result.summary);
    case OutputFormat::json:
        return render_json(result.rows, result.summary, verbose);
    }
    throw PreconditionError("unknown output format");
}

// ---- parsers -----------------------------------------------------------------

std::vector<ReportRow> parse_csv(const std::string& text) {
    std::istringstream in(text);
    std::string line;
    std::vector<ReportRow> rows;
    bool header_seen = false;
    while (std::getline(in, line)) {
        if (line.empty() || line[0] == '#') continue;
        if (!header_seen) {
            if (line != kCsvHeader) throw PreconditionError("unexpected csv header");
            header_seen = true;
            continue;
        }
        auto f = csv_split(line);
        if (f.size() != 9) throw PreconditionError("csv row with wrong field count");
        ReportRow r;
        r.spec = f[0];
        r.dim = std::stoi(f[1]);
        r.fano = parse_bool(f[2], "fano");
        r.fano_index = f[3] == "-" ? std::nullopt : std::optional<Rational>(parse_rational(f[3]));
        r.two_fano = parse_bool(f[4], "two_fano");
        r.ch2_strict = parse_bool(f[5], "ch2_strict");
        r.boundary = parse_bool(f[6], "boundary_flag");
        r.oracle = f[7] == "-" ? std::nullopt : std::optional<bool>(parse_bool(f[7], "oracle"));
        r.agree = parse_bool(f[8], "agree");
        rows.push_back(std::move(r));
    }
    return rows;
}

SweepResult parse_json(const std::string& text) {
    Json doc = Json::parse(text);
    SweepResult result;
    for (const auto& row : doc.at("rows")) {
        ReportRow r;
        r.spec = row.at("spec").get<std::string>();
        r.dim = row.at("dim").get<int>();
        r.fano = row.at("fano").get<bool>();
        if (!row.at("fano_index").is_null())
            r.fano_index = parse_rational(row.at("fano_index").get<std::string>());
        r.two_fano = row.at("two_fano").get<bool>();
        r.ch2_strict = row.at("ch2_strict").get<bool>();
        r.boundary = row.at("boundary_flag").get<bool>();
        if (!row.at("oracle").is_null()) r.oracle = row.at("oracle").get<bool>();
        r.agree = row.at("agree").get<bool>();
        result.rows.push_back(std::move(r));
    }
    const auto& s = doc.at("summary");
    result.summary.rows = s.at("rows").get<std::size_t>();
    result.summary.fano = s.at("fano").get<std::size_t>();
    result.summary.two_fano = s.at("two_fano").get<std::size_t>();
    result.summary.boundary = s.at("boundary").get<std::size_t>();
    result.summary.oracle_defined = s.at("oracle_defined").get<std::size_t>();
    result.summary.oracle_agree = s.at("oracle_agree").get<std::size_t>();
    return result;
}

} // namespace fano
