#pragma once

#include <cstdint>

#include "lsfc/scheme.hpp"

namespace lsfc {

/// Seeded stand-ins for the subfunction outputs f_k(W_k).
struct SubfunctionOutputs {
    Vec f;
    std::uint64_t seed;

    static SubfunctionOutputs random(const ProblemInstance& inst, std::uint64_t seed);
    static SubfunctionOutputs zero(const ProblemInstance& inst, std::uint64_t seed);
};

struct ServerState {
    std::size_t id;
    std::size_t block_index; // into plan.blocks
    std::size_t delta;       // server position within its group
    std::vector<std::size_t> tasks;
    Vec computed;            // f_k for k in tasks, in task order
    Vec coefficient_row;     // global length-K row it transmits
};

struct TransmissionRecord {
    std::size_t server_id;
    IndexRange recipients;
    Scalar payload;
};

struct TransmissionLog {
    std::vector<TransmissionRecord> records;
};

struct ServerAudit {
    std::size_t server_id;
    std::size_t task_count;
    std::size_t recipient_count;
    std::size_t message_count;
    bool pass;
};

struct AuditReport {
    std::vector<ServerAudit> servers;
    bool all_pass;
};

struct SimulationReport {
    std::uint64_t seed;
    std::size_t server_count;
    std::size_t total_messages;
    Vec decoded;      // per user
    Vec ground_truth; // D * f
    bool exact;
    TransmissionLog log;
    AuditReport audit;
};

/// Demand, computing, and communication phases run in-process against a plan.
SimulationReport run(const ProblemInstance& inst, const DemandMatrix& demand,
                     const SchemePlan& plan, const SubfunctionOutputs& outputs);

AuditReport audit_constraints(const SchemePlan& plan, const TransmissionLog& log);

} // namespace lsfc
