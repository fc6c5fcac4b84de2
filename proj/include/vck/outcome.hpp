#pragma once

#include <optional>

#include "vck/graph.hpp"
#include "vck/trace.hpp"

namespace vck {

// Uniform return shape for all kernelizers. Yes keeps the edgeless remainder
// instance so a witness cover can still be lifted through the trace.
struct KernelOutcome {
    enum class Status { Kernel, Yes, No };

    Status status = Status::Kernel;
    std::optional<Instance> instance;  // absent only for No
    ReductionTrace trace;

    bool is_kernel() const { return status == Status::Kernel; }
    bool is_yes() const { return status == Status::Yes; }
    bool is_no() const { return status == Status::No; }
    bool decided() const { return status != Status::Kernel; }

    static KernelOutcome no(ReductionTrace trace = {}) {
        return {Status::No, std::nullopt, std::move(trace)};
    }
    // Kernel when edges remain, Yes when the graph is edgeless.
    static KernelOutcome settle(Instance inst, ReductionTrace trace) {
        Status s = inst.graph.edgeless() ? Status::Yes : Status::Kernel;
        return {s, std::move(inst), std::move(trace)};
    }
};

}  // namespace vck
