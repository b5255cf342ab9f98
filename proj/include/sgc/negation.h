#ifndef SGC_NEGATION_H
#define SGC_NEGATION_H

#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "sgc/task.h"

namespace sgc {

// Fluent -> complement fluent mapping produced by complete_negations and
// by formula lowering. Name-keyed so it is stable across task copies.
struct ComplementTable {
    std::unordered_map<std::string, std::string> by_fluent;

    bool has(const std::string& fluent) const { return by_fluent.count(fluent) > 0; }
    const std::string& of(const std::string& fluent) const { return by_fluent.at(fluent); }
};

/*
  Introduce a complement fluent for each target p: the complement is in the
  initial state iff p is not, every action deleting p adds it and every
  action adding p deletes it. Nothing else changes. Complements that
  already exist (from an earlier pass) are reused and the maintenance edits
  are idempotent. The returned table covers exactly the targets.
*/
std::pair<GroundTask, ComplementTable> complete_negations(const GroundTask& task,
                                                          const std::vector<FluentId>& targets);

}  // namespace sgc

#endif
