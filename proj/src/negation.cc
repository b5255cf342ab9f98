#include "sgc/negation.h"

#include "sgc/errors.h"
#include "sgc/names.h"

using namespace std;

namespace sgc {

pair<GroundTask, ComplementTable> complete_negations(const GroundTask& task,
                                                     const vector<FluentId>& targets) {
    GroundTask result = task;
    ComplementTable table;
    for (FluentId target : targets) {
        if (target < 0 || target >= result.num_fluents())
            throw UnknownFluent("#" + to_string(target));
        const string name = result.fluent_name(target);
        const string complement_name = names::complement(name);
        if (table.has(name))
            continue;

        FluentId complement;
        if (auto existing = result.find_fluent(complement_name)) {
            complement = *existing;
        } else {
            complement = result.add_fluent(complement_name);
            if (!result.init.contains(target))
                result.init.insert(complement);
        }
        table.by_fluent.emplace(name, complement_name);

        for (GroundAction& action : result.actions) {
            if (action.del.contains(target))
                action.add.insert(complement);
            if (action.add.contains(target))
                action.del.insert(complement);
        }
    }
    return {std::move(result), std::move(table)};
}

}  // namespace sgc
