#ifndef FERRERSLAB_REPORT_HPP
#define FERRERSLAB_REPORT_HPP

#include <string>

#include <json.hpp>

#include "ferrerslab/ferrers.hpp"
#include "ferrerslab/intervals.hpp"
#include "ferrerslab/signed_interval.hpp"

namespace ferrerslab {

// JSON certificates (schema "ferrerslab-report/1"): indices are 1-based,
// matrices are rows of 0/1 strings.

nlohmann::json to_json(const Permutation& p);
nlohmann::json to_json(const Arrangement& a);
nlohmann::json to_json(const FerrersCover& c);
nlohmann::json to_json(const ZeroPartition& zp);
nlohmann::json to_json(const Representation& rep);
nlohmann::json zero_cells_json(const std::vector<ZeroCell>& cells);

Representation representation_from_json(const nlohmann::json& j);

nlohmann::json make_report(const std::string& kind, const std::string& answer);
nlohmann::json report_ferrers(bool ferrers);
nlohmann::json report_fdim2(const Fdim2Decision& d);
nlohmann::json report_interval_bigraph(const IntervalBigraphDecision& d);
nlohmann::json report_signed_bigraph(const SignedBigraphDecision& d);
nlohmann::json report_cott(const CottDecision& d, const Graph& g);

} // namespace ferrerslab

#endif
