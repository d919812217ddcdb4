// JSON wire formats. Rational-mode payloads encode weights and coordinates as
// exact "p/q" strings; float mode uses plain numbers. Every emitter/parser
// pair round-trips to an equal value.
#pragma once

#include <json.hpp>

#include "flatcycle/count.hpp"
#include "flatcycle/kappa.hpp"
#include "flatcycle/quantize.hpp"
#include "flatcycle/report.hpp"
#include "flatcycle/transport.hpp"

namespace flatcycle {

using Json = nlohmann::json;

Json cycle_to_json(const ZeroCycle& t);
ZeroCycle cycle_from_json(const Json& j);

Json chain_to_json(const OneChain& s);
OneChain chain_from_json(const Json& j);

Json transport_to_json(const TransportSolution& sol, Mode mode);
TransportSolution transport_from_json(const Json& j);

Json grid_cycle_to_json(const GridCycle& g);
GridCycle grid_cycle_from_json(const Json& j);

Json quantized_to_json(const QuantizedCycle& p);
QuantizedCycle quantized_from_json(const Json& j);

Json field_to_json(const GridVectorField& eta);
GridVectorField field_from_json(const Json& j);

Json kappa_to_json(const KappaEstimate& est);

Json report_to_json(const RunReport& rep);

std::string count_sweep_csv_header();
std::string count_sweep_csv_row(const CountInstance& inst, const Int& exact,
                                double ln_exact, double bound_f,
                                double bound_g_ln, bool pass);

}  // namespace flatcycle
