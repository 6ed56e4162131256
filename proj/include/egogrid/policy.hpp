#pragma once

#include <vector>

#include "egogrid/a2c.hpp"
#include "egogrid/state.hpp"

namespace egogrid {

// Evaluation-time action source. Receives the stacked observation batch and
// the world states (scripted baselines read the state; the network ignores
// it). Returns one action-set index per element.
class Policy {
public:
    virtual ~Policy() = default;
    virtual void act(const float* obs, int batch, size_t obs_size,
                     const std::vector<const GameState*>& states,
                     std::vector<int>& action_indices) = 0;
};

// Greedy argmax over the network's policy logits, ties to the lowest index.
class NetPolicy : public Policy {
public:
    explicit NetPolicy(PolicyNet<float>& net) : net_(net) {}
    void act(const float* obs, int batch, size_t obs_size,
             const std::vector<const GameState*>& states,
             std::vector<int>& action_indices) override;

private:
    PolicyNet<float>& net_;
    std::vector<float> logits_, values_;
};

class NoopPolicy : public Policy {
public:
    void act(const float*, int batch, size_t, const std::vector<const GameState*>&,
             std::vector<int>& action_indices) override {
        action_indices.assign(static_cast<size_t>(batch), 0);
    }
};

// Hand-coded Simple Zelda solver: BFS to the key, then to the door, issuing
// the first step's direction each tick (the turn-then-move rule makes a
// repeated direction turn and then move). Tie-breaking prefers vertical
// moves and resolves horizontal by the sign of the column difference, so the
// policy is reflection-equivariant by construction.
class ScriptedSimpleZelda : public Policy {
public:
    void act(const float* obs, int batch, size_t obs_size,
             const std::vector<const GameState*>& states,
             std::vector<int>& action_indices) override;
};

// Hand-coded Discrete Solarfox gem collector: BFS over (position, heading)
// states to the nearest gem, following the first turn of the best route.
class ScriptedSolarfox : public Policy {
public:
    void act(const float* obs, int batch, size_t obs_size,
             const std::vector<const GameState*>& states,
             std::vector<int>& action_indices) override;
};

}  // namespace egogrid
