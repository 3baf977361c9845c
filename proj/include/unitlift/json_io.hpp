#pragma once

#include <json.hpp>

#include "unitlift/chain.hpp"
#include "unitlift/group.hpp"
#include "unitlift/lift.hpp"
#include "unitlift/ring.hpp"

namespace unitlift {

using json = nlohmann::json;

// Descriptors are tagged objects:
//   {"type":"zmod","m":27}
//   {"type":"gaussian","p":3,"k":2}
//   {"type":"galois","p":2,"k":2,"q":[1,1,1]}        q ascending, monic
//   {"type":"matrix","n":3,"base":{...}}
//   {"type":"group_ring","group":{...},"base":{...}}
// Groups: {"type":"cyclic","n":5}, {"type":"symmetric","n":3},
//         {"type":"product","factors":[{...},{...}]}
json descriptor_to_json(const RingPtr& ring);
RingPtr descriptor_from_json(const json& j);

json group_to_json(const GroupPtr& group);
GroupPtr group_from_json(const json& j);

// Elements are nested integer arrays matching the payload shape: a bare
// integer for zmod, [a,b] for gaussian, ascending coefficients for
// galois, row-major nested arrays for matrices, and per-group-element
// coefficient arrays for group rings. Input integers are reduced into
// canonical range (negatives allowed).
json element_to_json(const RingElement& x);
RingElement element_from_json(const RingPtr& ring, const json& j);

// Chains: {"chain":{"generator":3,"k":3,"s":3}} for power chains or
// {"ideals":[{"generator":g,"exponent":e},...],"t":[...],"s":[...]}.
json chain_to_json(const CncChain& chain);
CncChain chain_from_json(const RingPtr& ring, const json& j);

json certificate_to_json(const UnitCertificate& cert);

// Counts as a JSON number when they fit in int64, else a decimal string.
json count_to_json(const Count& c);

}  // namespace unitlift
