#pragma once

#include <json.hpp>

#include "connasym/expansion.hpp"
#include "connasym/models.hpp"
#include "connasym/oracle.hpp"

namespace connasym {

using njson = nlohmann::json;

njson rat_json(const BigRat& q);
njson poly_json(const PolyQ& p);
PolyQ poly_from_json(const njson& j);
njson ring_elem_json(const RingElem& e);
njson egf_json(const Egf& a);
njson table_json(const ExpansionTable& t);
njson histogram_json(const ComponentHistogram& h);
njson evaluation_json(const ExpansionEvaluation& ev);
njson leading_json(const LeadingTerm& lt);
njson growth_json(const GrowthReport& rep);
njson convergence_json(const ConvergenceReport& rep);
njson models_listing_json();

// {"d":2,"P":3,"D":3,"rho":"1/3","p":"1/4","p_decimal":"0.25"}; p and
// p_decimal are success probabilities converted exactly to rho = p/(1-p).
ModelParams params_from_json(const njson& j);
BigRat rho_from_probability(const BigRat& p);

}  // namespace connasym
