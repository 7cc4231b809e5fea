// JSON encodings of witnesses, oracle results and partition runs. Output is
// compact with a fixed key order so identical inputs give identical bytes.

#ifndef WRT_JSON_IO_HPP_
#define WRT_JSON_IO_HPP_

#include <string>
#include <string_view>

#include "wrt/oracle.hpp"
#include "wrt/partition.hpp"
#include "wrt/witness.hpp"

namespace wrt {

// {"kind":"path","u":..,"path":[..],"weight":"p/q"} or
// {"kind":"pair","a":[..],"b":[..],"weight_a":"p/q","weight_b":"p/q"}
std::string witness_to_json(const Witness& witness);
// Throws std::invalid_argument on malformed input.
Witness witness_from_json(std::string_view text);

std::string oracle_to_json(const OracleResult& result);

// Colours are listed for coloured vertices only, keyed by id.
std::string partition_to_json(const PartitionResult& result, bool with_trace = false);

}  // namespace wrt

#endif  // WRT_JSON_IO_HPP_
