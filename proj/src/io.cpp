#include "lsfc/io.hpp"

namespace lsfc {

Field parse_field_json(const Json& j) {
    std::string kind = j.at("kind").get<std::string>();
    if (kind == "prime") return Field::prime(j.at("q").get<std::int64_t>());
    if (kind == "rational") return Field::rational();
    throw std::invalid_argument("unknown field kind '" + kind + "'");
}

Json field_to_json(const Field& f) {
    Json j;
    if (f.is_prime_field()) {
        j["kind"] = "prime";
        j["q"] = f.modulus();
    } else {
        j["kind"] = "rational";
    }
    return j;
}

Field parse_field_flag(const std::string& s) {
    if (s == "rational") return Field::rational();
    if (s.rfind("prime:", 0) == 0) return Field::prime(std::stoll(s.substr(6)));
    throw std::invalid_argument("field must be 'prime:<q>' or 'rational', got '" + s + "'");
}

Matrix matrix_from_json(const Json& j, const Field& f) {
    if (!j.is_array() || j.empty() || !j.front().is_array())
        throw std::invalid_argument("matrix must be a non-empty array of rows");
    std::size_t cols = j.front().size();
    Matrix m(j.size(), cols, f);
    for (std::size_t r = 0; r < j.size(); ++r) {
        if (j[r].size() != cols) throw std::invalid_argument("ragged matrix rows");
        for (std::size_t c = 0; c < cols; ++c) {
            const Json& e = j[r][c];
            if (e.is_number_integer())
                m.at(r, c) = Scalar::from_int(f, e.get<std::int64_t>());
            else if (e.is_string())
                m.at(r, c) = Scalar::from_string(f, e.get<std::string>());
            else
                throw std::invalid_argument("matrix entries must be integers or strings");
        }
    }
    return m;
}

Json matrix_to_json(const Matrix& m) {
    Json rows = Json::array();
    for (std::size_t r = 0; r < m.rows(); ++r) {
        Json row = Json::array();
        for (std::size_t c = 0; c < m.cols(); ++c) row.push_back(m.at(r, c).to_string());
        rows.push_back(std::move(row));
    }
    return rows;
}

DemandFile parse_demand_file(const Json& j) {
    Field f = parse_field_json(j.at("field"));
    return DemandFile{f, matrix_from_json(j.at("matrix"), f)};
}

Json demand_file_to_json(const DemandFile& d) {
    Json j;
    j["field"] = field_to_json(d.field);
    j["matrix"] = matrix_to_json(d.matrix);
    return j;
}

Json bounds_to_json(const BoundsReport& rep) {
    Json j;
    j["rate_formula"] = rep.rate_formula;
    if (rep.has_finite_q) {
        j["lb_finite_q"] = rep.lb_finite_q;
        j["lb_finite_q_ceil"] = rep.lb_finite_q_ceil;
        j["gap_finite_q"] = rep.gap_finite_q;
        j["q_ge_k"] = rep.q_ge_k;
    }
    j["lb_large_q"] = rep.lb_large_q;
    j["lb_real"] = rep.lb_real;
    j["lb_real_ceil"] = rep.lb_real_ceil;
    j["gap_real"] = rep.gap_real;
    j["delta_divides_l"] = rep.delta_divides_l;
    j["block_width_divides_k"] = rep.block_width_divides_k;
    return j;
}

namespace {

Json vec_to_json(const Vec& v) {
    Json j = Json::array();
    for (const Scalar& s : v) j.push_back(s.to_string());
    return j;
}

Json index_set_to_json(const std::vector<std::size_t>& v) {
    Json j = Json::array();
    for (std::size_t i : v) j.push_back(i + 1); // 1-based in reports
    return j;
}

} // namespace

Json plan_to_json(const SchemePlan& plan) {
    Json j;
    j["servers"] = plan.server_count;
    j["rate"] = plan.rate;
    j["rate_formula"] = plan.rate_formula;
    Json groups = Json::array();
    for (const BlockPlan& bp : plan.blocks) {
        Json g;
        g["group"] = {bp.i + 1, bp.j + 1};
        g["kind"] = bp.kind == BlockKind::standard ? "standard" : "thin";
        g["served_users"] = {bp.served_users.begin + 1, bp.served_users.end};
        g["columns"] = {bp.columns.begin + 1, bp.columns.end};
        if (bp.kind == BlockKind::standard) {
            g["pivot_columns"] = index_set_to_json(bp.pivot_cols);
            Json nus = Json::array();
            for (const Vec& nu : bp.nullspace_vectors) nus.push_back(vec_to_json(nu));
            g["nullspace_vectors"] = std::move(nus);
        }
        Json tasks = Json::array();
        for (const auto& t : bp.tasks) tasks.push_back(index_set_to_json(t));
        g["tasks"] = std::move(tasks);
        groups.push_back(std::move(g));
    }
    j["groups"] = std::move(groups);
    j["transmit_matrix"] = matrix_to_json(plan.transmit_rows);
    j["decode_matrix"] = matrix_to_json(plan.decode_map);
    return j;
}

Json simulation_to_json(const SimulationReport& rep) {
    Json j;
    j["seed"] = rep.seed;
    j["servers"] = rep.server_count;
    j["messages"] = rep.total_messages;
    j["decoded"] = vec_to_json(rep.decoded);
    j["ground_truth"] = vec_to_json(rep.ground_truth);
    j["exact"] = rep.exact;
    Json audits = Json::array();
    for (const ServerAudit& a : rep.audit.servers)
        audits.push_back({{"server", a.server_id + 1},
                          {"tasks", a.task_count},
                          {"recipients", a.recipient_count},
                          {"messages", a.message_count},
                          {"pass", a.pass}});
    j["audit"] = {{"servers", std::move(audits)}, {"all_pass", rep.audit.all_pass}};
    return j;
}

Json oracle_to_json(const OracleResult& res) {
    Json j;
    j["schema"] = kReportSchema;
    j["r_max"] = res.r_max;
    if (res.min_r) {
        j["min_r"] = *res.min_r;
        j["c"] = matrix_to_json(res.witness->c);
        j["a"] = matrix_to_json(res.witness->a);
    } else {
        j["min_r"] = "exceeded budget";
    }
    return j;
}

Json run_report(const ProblemInstance& inst, const SchemePlan& plan,
                const BoundsReport& bounds, const SimulationReport* sim) {
    Json j;
    j["schema"] = kReportSchema;
    j["instance"] = {{"k", inst.K},
                     {"l", inst.L},
                     {"m", inst.M},
                     {"delta", inst.Delta},
                     {"field", field_to_json(inst.field)}};
    j["plan"] = plan_to_json(plan);
    j["bounds"] = bounds_to_json(bounds);
    j["simulation"] = sim ? simulation_to_json(*sim) : Json(nullptr);
    return j;
}

} // namespace lsfc
