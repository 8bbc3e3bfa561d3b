#include "schurkit/serialize.hpp"

namespace schurkit {

Json to_json(const Rational& q) {
    if (q.is_integer() && !q.is_big())
        return q.to_int64();
    return q.str();
}

Json to_json(const Weight& w) {
    Json out = Json::array();
    for (const auto& c : w.coords())
        out.push_back(to_json(c));
    return out;
}

Json to_json(const WeightSet& ws) {
    Json elems = Json::array();
    for (const auto& w : ws)
        elems.push_back(to_json(w));
    return Json{{"label", ws.label()}, {"elements", std::move(elems)}};
}

Json to_json(const ExactMatrix& m) {
    Json entries = Json::array();
    for (std::size_t i = 0; i < m.rows(); ++i) {
        Json row = Json::array();
        for (std::size_t j = 0; j < m.cols(); ++j)
            row.push_back(m.at(i, j).str());
        entries.push_back(std::move(row));
    }
    return Json{{"rows", m.rows()}, {"cols", m.cols()}, {"entries", std::move(entries)}};
}

Json to_json(const RelationReport& rep) {
    Json rels = Json::array();
    for (const auto& s : rep.relations) {
        Json j{{"label", s.label},
               {"status", s.holds ? "holds" : "fails"},
               {"instances", s.instances},
               {"failures", s.failures}};
        if (s.witness)
            j["witness"] = Json{{"instance", s.witness->instance},
                                {"row", s.witness->row + 1},
                                {"col", s.witness->col + 1},
                                {"residual", s.witness->value.str()}};
        rels.push_back(std::move(j));
    }
    Json out{{"presentation", std::string(1, rep.presentation)},
             {"type", std::string(1, family_letter(rep.type.family()))},
             {"rank", rep.type.rank()},
             {"r", rep.r},
             {"ok", rep.ok()},
             {"relations", std::move(rels)},
             {"carrier", rep.carrier},
             {"reduced_word", rep.reduced_word},
             {"generator_convention", rep.generator_convention}};
    if (!rep.notes.empty())
        out["notes"] = rep.notes;
    return out;
}

Json to_json(const DecompositionResult& res) {
    Json mult = Json::array();
    for (const auto& [w, c] : res.multiplicities)
        mult.push_back(Json{{"highest_weight", to_json(w)}, {"multiplicity", c}});
    return Json{{"equal", res.equal},
                {"pi", to_json(res.pi)},
                {"pi0", to_json(res.pi0)},
                {"pi_minus_pi0", to_json(res.pi.minus(res.pi0, "pi\\pi0"))["elements"]},
                {"multiplicities", std::move(mult)}};
}

Json to_json(const ZeroLocus& z) {
    Json out{{"equations", z.equations},
             {"include_P1Hi", z.include_P1Hi},
             {"size", z.locus.size()},
             {"equals_Pi", z.equals_Pi},
             {"locus", to_json(z.locus)}};
    out["half_integer_witness"] = z.half_integer_witness ? to_json(*z.half_integer_witness) : Json(nullptr);
    return out;
}

Json to_json(const QuotientWitness& q) {
    return Json{{"dim_tower", q.dim_tower},
                {"dim_tensor", q.dim_tensor},
                {"difference", static_cast<std::int64_t>(q.dim_tower) - static_cast<std::int64_t>(q.dim_tensor)},
                {"pi_minus_pi0", to_json(q.pi_minus_pi0)["elements"]},
                {"predicted_difference", q.predicted_difference},
                {"consistent", q.consistent}};
}

Json to_json(const Path& p) {
    Json out = Json::array();
    for (std::size_t k = 0; k < p.times.size(); ++k) {
        Json x = Json::array();
        for (const auto& c : p.points[k].coords())
            x.push_back(c.str());
        out.push_back(Json::array({p.times[k].str(), std::move(x)}));
    }
    return out;
}

Json to_json(const Crystal& c) {
    Json elems = Json::array();
    for (const auto& p : c.elements)
        elems.push_back(to_json(p));
    Json edges = Json::array();
    for (const auto& e : c.edges)
        edges.push_back(Json::array({e.from, e.root + 1, e.to}));
    return Json{{"highest_weight", to_json(c.highest)},
                {"size", c.size()},
                {"elements", std::move(elems)},
                {"edges", std::move(edges)}};
}

Json to_json(const CensusReport& c) {
    Json entries = Json::array();
    for (const auto& e : c.entries)
        entries.push_back(Json{{"lambda", to_json(e.lambda)},
                               {"dual", to_json(e.dual)},
                               {"s_lambda", e.s_lambda},
                               {"s_dual_opp", e.s_dual_opp},
                               {"weyl_dim", e.weyl_dim},
                               {"ok", e.ok}});
    return Json{{"entries", std::move(entries)}, {"total", c.total}, {"expected", c.expected}, {"ok", c.ok}};
}

Json header_json(std::optional<Family> family, std::optional<int> rank, std::optional<int> r) {
    Json h{{"tool_version", kToolVersion}};
    h["family"] = family ? Json(std::string(1, family_letter(*family))) : Json(nullptr);
    h["rank"] = rank ? Json(*rank) : Json(nullptr);
    h["r"] = r ? Json(*r) : Json(nullptr);
    if (family && rank)
        h["reduced_word"] = longest_element(RootSystem(LieType(*family, *rank))).word_one_based();
    else
        h["reduced_word"] = nullptr;
    return h;
}

std::string decomposition_csv_header() {
    return "family,n,r,equal,|pi|,|pi0|,dim_S_pi,dim_Schur";
}

std::string decomposition_csv_row(Family family, int n, int r, bool equal, std::size_t pi, std::size_t pi0,
                                  const SchurDimensions& dims) {
    return std::string(1, family_letter(family)) + "," + std::to_string(n) + "," + std::to_string(r) + "," +
           (equal ? "true" : "false") + "," + std::to_string(pi) + "," + std::to_string(pi0) + "," +
           std::to_string(dims.s_pi) + "," + std::to_string(dims.schur);
}

} // namespace schurkit
