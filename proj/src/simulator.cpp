#include "lsfc/simulator.hpp"

#include "lsfc/rng.hpp"

namespace lsfc {

SubfunctionOutputs SubfunctionOutputs::random(const ProblemInstance& inst, std::uint64_t seed) {
    SplitMix64 rng(seed);
    Vec f;
    f.reserve(inst.K);
    for (std::size_t k = 0; k < inst.K; ++k) f.push_back(rng.next_scalar(inst.field));
    return SubfunctionOutputs{std::move(f), seed};
}

SubfunctionOutputs SubfunctionOutputs::zero(const ProblemInstance& inst, std::uint64_t seed) {
    return SubfunctionOutputs{Vec(inst.K, Scalar::zero(inst.field)), seed};
}

SimulationReport run(const ProblemInstance& inst, const DemandMatrix& demand,
                     const SchemePlan& plan, const SubfunctionOutputs& outputs) {
    if (plan.instance.K != inst.K || plan.instance.L != inst.L || plan.instance.M != inst.M ||
        plan.instance.Delta != inst.Delta || !(plan.instance.field == inst.field) ||
        plan.demand.matrix != demand.matrix)
        throw std::invalid_argument("plan was built for a different instance or demand");
    if (outputs.f.size() != inst.K)
        throw DimensionError("subfunction vector must have length K");

    // Computing phase: each server evaluates only its assigned subfunctions.
    std::vector<ServerState> servers;
    std::size_t sid = 0;
    for (std::size_t b = 0; b < plan.blocks.size(); ++b) {
        const BlockPlan& bp = plan.blocks[b];
        for (std::size_t d = 0; d < bp.server_count(); ++d) {
            ServerState s{sid, b, d, bp.tasks[d], {}, plan.transmit_rows.row(sid)};
            for (std::size_t k : s.tasks) s.computed.push_back(outputs.f[k]);
            servers.push_back(std::move(s));
            ++sid;
        }
    }

    // Communication phase: one message per server, built from its own
    // computed values only.
    TransmissionLog log;
    Vec payloads;
    for (const ServerState& s : servers) {
        Scalar x = Scalar::zero(inst.field);
        for (std::size_t t = 0; t < s.tasks.size(); ++t)
            x = x + s.coefficient_row[s.tasks[t]] * s.computed[t];
        const BlockPlan& bp = plan.blocks[s.block_index];
        log.records.push_back({s.id, bp.served_users, x});
        payloads.push_back(x);
    }

    Vec decoded;
    for (std::size_t l = 0; l < inst.L; ++l) {
        // Users see only payloads addressed to them; decode_user reads the
        // full vector but touches only the user's row-group entries.
        decoded.push_back(decode_user(plan, l, payloads));
    }
    Vec truth = matrix_times_col(demand.matrix, outputs.f);

    bool exact = decoded.size() == truth.size();
    for (std::size_t l = 0; l < decoded.size() && exact; ++l)
        if (decoded[l] != truth[l]) exact = false;

    AuditReport audit = audit_constraints(plan, log);
    return SimulationReport{outputs.seed, servers.size(), log.records.size(),
                            std::move(decoded), std::move(truth), exact,
                            std::move(log), std::move(audit)};
}

AuditReport audit_constraints(const SchemePlan& plan, const TransmissionLog& log) {
    AuditReport rep;
    rep.all_pass = true;
    std::vector<std::size_t> messages(plan.server_count, 0);
    for (const auto& rec : log.records)
        if (rec.server_id < messages.size()) ++messages[rec.server_id];

    std::size_t sid = 0;
    for (const BlockPlan& bp : plan.blocks) {
        for (std::size_t d = 0; d < bp.server_count(); ++d) {
            std::size_t recipients = 0;
            for (const auto& rec : log.records)
                if (rec.server_id == sid) recipients = std::max(recipients, rec.recipients.size());
            ServerAudit a{sid, bp.tasks[d].size(), recipients, messages[sid], true};
            a.pass = a.task_count <= plan.instance.M && a.recipient_count <= plan.instance.Delta &&
                     a.message_count == 1;
            rep.all_pass = rep.all_pass && a.pass;
            rep.servers.push_back(a);
            ++sid;
        }
    }
    return rep;
}

} // namespace lsfc
