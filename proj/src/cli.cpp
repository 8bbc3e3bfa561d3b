#include "schurkit/cli.hpp"

#include "schurkit/serialize.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <cstdlib>
#include <ostream>
#include <sstream>

namespace schurkit::cli {

namespace {

struct Table {
    std::vector<std::string> columns;
    std::vector<std::vector<std::string>> rows;
};

struct Check {
    std::string label;
    bool ok;
};

struct Outcome {
    Json payload = Json::object();
    Table table;
    std::vector<Check> checks;
};

struct Target {
    std::string family;
    int rank = 0;
    int r = 0;
};

class UsageError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

LieType make_type(const Target& t) {
    return LieType(parse_family(t.family), t.rank);
}

void require_r(const Target& t) {
    if (t.r < 1)
        throw UsageError("r must be at least 1");
}

std::string yes_no(bool b) {
    return b ? "true" : "false";
}

std::string csv_field(const std::string& s) {
    if (s.find_first_of(",\"") == std::string::npos)
        return s;
    std::string q = "\"";
    for (char c : s) {
        if (c == '"')
            q += '"';
        q += c;
    }
    return q + "\"";
}

void write_csv(std::ostream& out, const Table& t) {
    auto line = [&out](const std::vector<std::string>& cells) {
        for (std::size_t k = 0; k < cells.size(); ++k)
            out << (k ? "," : "") << csv_field(cells[k]);
        out << '\n';
    };
    line(t.columns);
    for (const auto& row : t.rows)
        line(row);
}

void write_text(std::ostream& out, const Json& header, const Outcome& o) {
    for (const auto& [k, v] : header.items())
        out << k << ": " << (v.is_string() ? v.get<std::string>() : v.dump()) << '\n';
    if (!o.table.columns.empty()) {
        std::vector<std::size_t> width(o.table.columns.size());
        for (std::size_t k = 0; k < width.size(); ++k) {
            width[k] = o.table.columns[k].size();
            for (const auto& row : o.table.rows)
                width[k] = std::max(width[k], row[k].size());
        }
        auto line = [&](const std::vector<std::string>& cells) {
            std::string s;
            for (std::size_t k = 0; k < cells.size(); ++k) {
                s += cells[k];
                if (k + 1 < cells.size())
                    s += std::string(width[k] - cells[k].size() + 2, ' ');
            }
            out << s << '\n';
        };
        out << '\n';
        line(o.table.columns);
        for (const auto& row : o.table.rows)
            line(row);
    }
    if (!o.checks.empty()) {
        out << '\n';
        for (const auto& c : o.checks)
            out << (c.ok ? "PASS " : "FAIL ") << c.label << '\n';
    }
}

// Comma-separated integers, one per coordinate.
Weight parse_weight(const std::string& text, const std::string& option, std::size_t n) {
    std::vector<std::int64_t> v;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        std::size_t used = 0;
        long long x = 0;
        try {
            x = std::stoll(item, &used);
        } catch (const std::exception&) {
            throw UsageError(option + ": '" + item + "' is not an integer");
        }
        if (used != item.size())
            throw UsageError(option + ": '" + item + "' is not an integer");
        v.push_back(x);
    }
    if (v.size() != n)
        throw UsageError(option + " needs " + std::to_string(n) + " comma-separated integers");
    return Weight::from_ints(v);
}

Weight parse_lambda(const std::string& text, const RootSystem& rs) {
    Weight w = parse_weight(text, "--lambda", rs.rank());
    if (!is_dominant(rs, w))
        throw UsageError("--lambda " + w.str() + " is not dominant for " + rs.type().str());
    return w;
}

Representation carrier_rep(const LieType& type, int r, const std::string& carrier, std::size_t max_dim) {
    return carrier == "tensor" ? tensor_power_rep(type, r, max_dim) : tower_rep(type, r, max_dim);
}

Outcome cmd_weights(const LieType& type, int r) {
    Outcome o;
    const auto big = tensor_weights_Pi(type, r);
    const auto small = tensor_dominant_pi(type, r);
    o.payload["Pi"] = to_json(big);
    o.payload["pi"] = to_json(small);
    o.table.columns = {"set", "weight"};
    for (const auto& w : big)
        o.table.rows.push_back({"Pi", w.str()});
    for (const auto& w : small)
        o.table.rows.push_back({"pi", w.str()});
    return o;
}

Outcome cmd_pi0(const LieType& type, int r) {
    Outcome o;
    const auto res = compare_pi0_pi(type, r);
    o.payload["pi0"] = to_json(res.pi0);
    o.payload["multiplicities"] = to_json(res)["multiplicities"];
    o.table.columns = {"highest_weight", "multiplicity"};
    for (const auto& [w, c] : res.multiplicities)
        o.table.rows.push_back({w.str(), std::to_string(c)});
    o.checks.push_back({"pi0-oracle", true});
    return o;
}

Outcome cmd_compare(const LieType& type, int r) {
    Outcome o;
    const auto res = compare_pi0_pi(type, r);
    const auto dims = schur_dimensions(type, r);
    o.payload = to_json(res);
    o.payload["dim_S_pi"] = dims.s_pi;
    o.payload["dim_Schur"] = dims.schur;
    o.table.columns = {"family", "n", "r", "equal", "|pi|", "|pi0|", "dim_S_pi", "dim_Schur"};
    std::stringstream row(decomposition_csv_row(type.family(), type.rank(), r, res.equal, res.pi.size(),
                                                res.pi0.size(), dims));
    std::vector<std::string> cells;
    for (std::string c; std::getline(row, c, ',');)
        cells.push_back(c);
    o.table.rows.push_back(std::move(cells));
    o.checks.push_back({"pi0-oracle", true});
    return o;
}

Outcome cmd_classify(int n_max, int r_max) {
    Outcome o;
    o.table.columns = {"family", "n", "r", "equal", "|pi|", "|pi0|", "dim_S_pi", "dim_Schur"};
    Json rows = Json::array();
    for (const auto& row : classify_type_B(n_max, r_max)) {
        rows.push_back(Json{{"n", row.n},
                            {"r", row.r},
                            {"equal", row.equal},
                            {"pi_size", row.pi_size},
                            {"pi0_size", row.pi0_size},
                            {"dim_S_pi", row.dims.s_pi},
                            {"dim_Schur", row.dims.schur}});
        o.table.rows.push_back({"B", std::to_string(row.n), std::to_string(row.r), yes_no(row.equal),
                                std::to_string(row.pi_size), std::to_string(row.pi0_size),
                                std::to_string(row.dims.s_pi), std::to_string(row.dims.schur)});
    }
    o.payload["rows"] = std::move(rows);
    o.checks.push_back({"pi0-oracle", true});
    return o;
}

Outcome cmd_idempotents(const LieType& type, int r, const std::string& carrier, bool matrices,
                        std::size_t max_dim) {
    Outcome o;
    const auto rep = carrier_rep(type, r, carrier, max_dim);
    const auto fam = build_idempotents(rep);
    const auto audit = audit_idempotents(rep, fam);
    o.payload["carrier"] = rep.carrier.describe();
    o.payload["dimension"] = rep.dim();
    Json entries = Json::array();
    o.table.columns = {"lambda", "rank", "multiplicity"};
    for (const auto& [lam, rm] : audit.ranks) {
        Json e{{"lambda", to_json(lam)}, {"rank", rm.first}, {"multiplicity", rm.second}};
        if (matrices)
            e["matrix"] = to_json(*fam.find(lam));
        entries.push_back(std::move(e));
        o.table.rows.push_back({lam.str(), std::to_string(rm.first), std::to_string(rm.second)});
    }
    o.payload["idempotents"] = std::move(entries);
    bool e_ok = true;
    bool f_ok = true;
    Json violations = Json::array();
    for (const auto& v : audit.ladder.violations) {
        (v.generator == 'e' ? e_ok : f_ok) = false;
        violations.push_back(Json{{"generator", std::string(1, v.generator)},
                                  {"i", v.index + 1},
                                  {"lambda", to_json(v.lambda)}});
    }
    o.payload["ladder_violations"] = std::move(violations);
    o.checks = {{"R1-orthogonality", audit.orthogonal},
                {"R1-completeness", audit.complete},
                {"H-reconstruction", audit.h_reconstructed},
                {"R'3", e_ok},
                {"R'4", f_ok},
                {"rank-multiplicity", audit.ranks_match}};
    return o;
}

// Deliberate corruptions of the operators, for exercising the checks.
struct Faults {
    std::int64_t scale_f_last = 1;
    std::string drop_idempotent;
};

Outcome cmd_verify(const LieType& type, int r, const std::string& which, const std::string& carrier,
                   std::size_t max_dim, const Faults& faults) {
    Outcome o;
    auto rep = carrier_rep(type, r, carrier, max_dim);
    if (faults.scale_f_last != 1)
        rep.gens.f.back() = Rational(faults.scale_f_last) * rep.gens.f.back();
    if (which == "serre" && !faults.drop_idempotent.empty())
        throw UsageError("--drop-idempotent needs --presentation idempotent");
    const RelationReport report = [&] {
        if (which == "serre")
            return verify_serre_presentation(type, r, rep);
        auto fam = build_idempotents(rep);
        if (!faults.drop_idempotent.empty()) {
            const Weight lam = parse_weight(faults.drop_idempotent, "--drop-idempotent", RootSystem(type).rank());
            if (fam.table.erase(lam) == 0)
                throw UsageError("--drop-idempotent: " + lam.str() + " is not a weight of the carrier");
        }
        return verify_idempotent_presentation(type, r, rep, fam);
    }();
    o.payload = to_json(report);
    if (faults.scale_f_last != 1 || !faults.drop_idempotent.empty())
        o.payload["faults"] = Json{{"scale_f_last", faults.scale_f_last}, {"drop_idempotent", faults.drop_idempotent}};
    o.table.columns = {"label", "status", "instances", "failures", "witness"};
    for (const auto& s : report.relations) {
        std::string w;
        if (s.witness)
            w = s.witness->instance + " @(" + std::to_string(s.witness->row + 1) + "," +
                std::to_string(s.witness->col + 1) + ")=" + s.witness->value.str();
        o.table.rows.push_back({s.label, s.holds ? "holds" : "fails", std::to_string(s.instances),
                                std::to_string(s.failures), w});
        o.checks.push_back({s.label, s.holds});
    }
    return o;
}

Outcome cmd_zero_locus(const LieType& type, int r, bool drop) {
    Outcome o;
    const auto z = zero_locus(type, r, !drop);
    o.payload = to_json(z);
    o.table.columns = {"point", "in_Pi"};
    const auto pi_all = tensor_weights_Pi(type, r);
    for (const auto& w : z.locus)
        o.table.rows.push_back({w.str(), yes_no(pi_all.contains(w))});
    if (drop && p1hi_needed(type)) {
        const bool larger = pi_all.minus(z.locus, "").empty() && z.locus.size() > pi_all.size();
        o.payload["expected"] = "strictly larger than Pi";
        o.checks.push_back({"V-strictly-larger", larger && z.half_integer_witness.has_value()});
    } else {
        o.payload["expected"] = "equal to Pi";
        o.checks.push_back({"V=Pi", z.equals_Pi});
    }
    return o;
}

Outcome cmd_dims(const LieType& type, int r) {
    Outcome o;
    const auto res = compare_pi0_pi(type, r);
    const auto dims = schur_dimensions(type, r);
    o.payload["dim_S_pi"] = dims.s_pi;
    o.payload["dim_Schur"] = dims.schur;
    o.payload["equal"] = res.equal;
    o.table.columns = {"family", "n", "r", "equal", "|pi|", "|pi0|", "dim_S_pi", "dim_Schur"};
    o.table.rows.push_back({std::string(1, family_letter(type.family())), std::to_string(type.rank()),
                            std::to_string(r), yes_no(res.equal), std::to_string(res.pi.size()),
                            std::to_string(res.pi0.size()), std::to_string(dims.s_pi),
                            std::to_string(dims.schur)});
    return o;
}

Outcome cmd_closure(const LieType& type, int r, std::size_t max_dim) {
    Outcome o;
    const auto q = quotient_witness(type, r, max_dim);
    const auto dims = schur_dimensions(type, r);
    o.payload = to_json(q);
    o.payload["dim_S_pi"] = dims.s_pi;
    o.payload["dim_Schur"] = dims.schur;
    o.table.columns = {"carrier", "closure_dim", "expected"};
    o.table.rows.push_back({"tower", std::to_string(q.dim_tower), std::to_string(dims.s_pi)});
    o.table.rows.push_back({"tensor", std::to_string(q.dim_tensor), std::to_string(dims.schur)});
    o.checks = {{"closure-tower", static_cast<std::int64_t>(q.dim_tower) == dims.s_pi},
                {"closure-tensor", static_cast<std::int64_t>(q.dim_tensor) == dims.schur}};
    return o;
}

Outcome cmd_crystal(const LieType& type, const std::string& lambda_text, std::size_t cap) {
    Outcome o;
    const RootSystem rs(type);
    const Weight lam = parse_lambda(lambda_text, rs);
    const auto crystal = generate_crystal(rs, lam, cap);
    const auto word = longest_element(rs).word;
    bool strings_ok = true;
    std::vector<StringTuple> strings;
    try {
        strings = string_tuples(crystal, word);
    } catch (const std::logic_error&) {
        strings_ok = false;
    }
    o.payload = to_json(crystal);
    o.payload["weyl_dimension"] = weyl_dimension(rs, lam);
    o.payload["strings"] = strings;
    o.table.columns = {"index", "endpoint", "breakpoints"};
    for (std::size_t k = 0; k < crystal.size(); ++k)
        o.table.rows.push_back({std::to_string(k), crystal.elements[k].endpoint().str(),
                                std::to_string(crystal.elements[k].times.size())});
    o.checks = {{"crystal-size", static_cast<std::int64_t>(crystal.size()) == weyl_dimension(rs, lam)},
                {"crystal-character", crystal.endpoint_character() == freudenthal_multiplicities(rs, lam)},
                {"string-bijection", strings_ok && strings.size() == crystal.size()}};
    return o;
}

Outcome cmd_census(const LieType& type, int r, std::size_t cap) {
    Outcome o;
    const auto c = basis_census(type, r, cap);
    o.payload = to_json(c);
    o.table.columns = {"lambda", "dual", "|S_lambda|", "|S_dual_opp|", "dim^2", "ok"};
    for (const auto& e : c.entries)
        o.table.rows.push_back({e.lambda.str(), e.dual.str(), std::to_string(e.s_lambda),
                                std::to_string(e.s_dual_opp), std::to_string(e.weyl_dim * e.weyl_dim),
                                yes_no(e.ok)});
    o.checks.push_back({"census", c.ok});
    return o;
}

std::size_t resolve_max_dim(long long flag) {
    if (flag > 0)
        return static_cast<std::size_t>(flag);
    if (const char* env = std::getenv("SCHURKIT_MAX_DIM")) {
        std::size_t used = 0;
        unsigned long long v = 0;
        try {
            v = std::stoull(env, &used);
        } catch (const std::exception&) {
            used = 0;
        }
        if (used == 0 || env[used] != '\0' || v == 0)
            throw UsageError(std::string("SCHURKIT_MAX_DIM='") + env + "' is not a positive integer");
        return static_cast<std::size_t>(v);
    }
    return kDefaultMaxCarrierDim;
}

void add_target(CLI::App* sub, Target& t, bool with_r) {
    sub->add_option("family", t.family, "B, C or D")->required();
    sub->add_option("rank", t.rank, "rank n")->required();
    if (with_r)
        sub->add_option("r", t.r, "tensor exponent r")->required();
}

} // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Exact computations with generalized Schur algebras of types B, C, D", "schurkit"};
    app.require_subcommand(1, 1);
    app.fallthrough();

    std::string format = "json";
    long long max_dim_flag = 0;
    std::size_t crystal_cap = kDefaultCrystalCap;
    app.add_option("--format", format, "json, csv or text")->check(CLI::IsMember({"json", "csv", "text"}));
    app.add_option("--max-dim", max_dim_flag, "carrier dimension cap (default 3000 or SCHURKIT_MAX_DIM)")
        ->check(CLI::PositiveNumber);
    app.add_option("--crystal-cap", crystal_cap, "largest crystal to generate")->check(CLI::PositiveNumber);

    Target t;
    auto* weights = app.add_subcommand("weights", "all weights Pi and dominant weights pi of E^r");
    add_target(weights, t, true);
    auto* pi0 = app.add_subcommand("pi0", "highest weights of composition factors of E^r");
    add_target(pi0, t, true);
    auto* compare = app.add_subcommand("compare", "pi0 against pi");
    add_target(compare, t, true);

    int n_max = 3;
    int r_max = 6;
    auto* classify = app.add_subcommand("classify-b", "pi0 == pi over a grid in type B");
    classify->add_option("--n-max", n_max)->check(CLI::PositiveNumber);
    classify->add_option("--r-max", r_max)->check(CLI::PositiveNumber);

    std::string carrier = "tower";
    bool matrices = false;
    auto* idem = app.add_subcommand("idempotents", "weight idempotents on the tower");
    add_target(idem, t, true);
    idem->add_option("--carrier", carrier)->check(CLI::IsMember({"tower", "tensor"}));
    idem->add_flag("--matrices", matrices, "include every 1_lambda as a matrix");

    std::string presentation;
    auto* verify = app.add_subcommand("verify", "check a presentation on the tower");
    add_target(verify, t, true);
    verify->add_option("--presentation", presentation)
        ->required()
        ->check(CLI::IsMember({"serre", "idempotent"}));
    verify->add_option("--carrier", carrier)->check(CLI::IsMember({"tower", "tensor"}));
    Faults faults;
    verify->add_option("--scale-f-last", faults.scale_f_last, "multiply f_n by this integer (fault injection)");
    verify->add_option("--drop-idempotent", faults.drop_idempotent, "omit 1_lambda, e.g. 0,0 (fault injection)");

    bool drop = false;
    auto* locus = app.add_subcommand("zero-locus", "common zeros of the Cartan relations");
    add_target(locus, t, true);
    locus->add_flag("--drop-p1hi", drop, "omit the P1(H_i) equations");

    auto* dims = app.add_subcommand("dims", "dimensions of S(pi) and the Schur algebra");
    add_target(dims, t, true);
    auto* closure = app.add_subcommand("closure", "operator algebra dimensions by span closure");
    add_target(closure, t, true);

    std::string lambda_text;
    auto* crystal = app.add_subcommand("crystal", "path crystal of L(lambda)");
    add_target(crystal, t, false);
    crystal->add_option("--lambda", lambda_text, "highest weight, e.g. 1,1")->required();

    auto* census = app.add_subcommand("census", "string-basis count against dim S(pi)");
    add_target(census, t, true);

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? kOk : kBadInvocation;
    }

    Outcome o;
    Json header;
    std::string what;
    try {
        const std::size_t max_dim = resolve_max_dim(max_dim_flag);
        if (app.got_subcommand(classify)) {
            what = "classify-b";
            header = header_json(Family::B, std::nullopt, std::nullopt);
            header["n_max"] = n_max;
            header["r_max"] = r_max;
            o = cmd_classify(n_max, r_max);
        } else {
            const LieType type = make_type(t);
            if (!app.got_subcommand(crystal))
                require_r(t);
            header = header_json(type.family(), type.rank(),
                                 app.got_subcommand(crystal) ? std::nullopt : std::optional<int>(t.r));
            if (app.got_subcommand(weights))
                what = "weights", o = cmd_weights(type, t.r);
            else if (app.got_subcommand(pi0))
                what = "pi0", o = cmd_pi0(type, t.r);
            else if (app.got_subcommand(compare))
                what = "compare", o = cmd_compare(type, t.r);
            else if (app.got_subcommand(idem))
                what = "idempotents", o = cmd_idempotents(type, t.r, carrier, matrices, max_dim);
            else if (app.got_subcommand(verify))
                what = "verify", o = cmd_verify(type, t.r, presentation, carrier, max_dim, faults);
            else if (app.got_subcommand(locus))
                what = "zero-locus", o = cmd_zero_locus(type, t.r, drop);
            else if (app.got_subcommand(dims))
                what = "dims", o = cmd_dims(type, t.r);
            else if (app.got_subcommand(closure))
                what = "closure", o = cmd_closure(type, t.r, max_dim);
            else if (app.got_subcommand(crystal))
                what = "crystal", o = cmd_crystal(type, lambda_text, crystal_cap);
            else
                what = "census", o = cmd_census(type, t.r, crystal_cap);
        }
    } catch (const CarrierTooLarge& e) {
        err << "schurkit: " << e.what() << " (raise --max-dim or SCHURKIT_MAX_DIM)\n";
        return kBadInvocation;
    } catch (const CrystalTooLarge& e) {
        err << "schurkit: " << e.what() << " (raise --crystal-cap)\n";
        return kBadInvocation;
    } catch (const OracleMismatch& e) {
        err << "schurkit: check failed: pi0-oracle: " << e.what() << '\n';
        return kCheckFailed;
    } catch (const std::invalid_argument& e) {
        err << "schurkit: " << e.what() << '\n';
        return kBadInvocation;
    } catch (const std::out_of_range& e) {
        err << "schurkit: " << e.what() << '\n';
        return kBadInvocation;
    } catch (const std::logic_error& e) {
        err << "schurkit: check failed: internal-consistency: " << e.what() << '\n';
        return kCheckFailed;
    }

    header["command"] = what;
    if (format == "json") {
        Json doc{{"header", header}};
        for (auto& [k, v] : o.payload.items())
            doc[k] = v;
        Json checks = Json::array();
        for (const auto& c : o.checks)
            checks.push_back(Json{{"label", c.label}, {"ok", c.ok}});
        doc["checks"] = std::move(checks);
        out << doc.dump(2) << '\n';
    } else if (format == "csv") {
        write_csv(out, o.table);
    } else {
        write_text(out, header, o);
    }

    int code = kOk;
    for (const auto& c : o.checks)
        if (!c.ok) {
            err << "schurkit: check failed: " << c.label << '\n';
            code = kCheckFailed;
        }
    return code;
}

} // namespace schurkit::cli
