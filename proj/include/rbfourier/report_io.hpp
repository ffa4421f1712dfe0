#ifndef RBFOURIER_REPORT_IO_HPP_
#define RBFOURIER_REPORT_IO_HPP_

#include <string>
#include <vector>

#include <json.hpp>

#include "rbfourier/fourier.hpp"
#include "rbfourier/gauge.hpp"
#include "rbfourier/group.hpp"
#include "rbfourier/rb.hpp"

namespace rbf {

nlohmann::json matrix_to_json(const MatrixXd& m);
nlohmann::json matrix_to_json(const MatrixXcd& m);  // pairs [re, im]
MatrixXd matrix_from_json(const nlohmann::json& j);

nlohmann::json group_table_to_json(const GroupTable& table);
nlohmann::json spectrum_to_json(const FourierSpectrum& spectrum);
nlohmann::json summary_to_json(const SpectralSummary& summary);
nlohmann::json bounds_to_json(const std::vector<BoundCheck>& bounds);
nlohmann::json gauge_to_json(const GaugeTransform& gauge);
nlohmann::json decay_model_to_json(const DecayModel& model);

// Decay CSV with the exact column set (m, mean, stderr, exact).
void write_decay_csv(const std::string& path, const std::vector<LengthStats>& stats);
std::string decay_csv_string(const std::vector<LengthStats>& stats);

// Minimal structural validator for the published report schema
// (supports type / required / properties / items / enum).  Returns a list
// of violations, empty when the document conforms.
std::vector<std::string> validate_against_schema(const nlohmann::json& value,
                                                 const nlohmann::json& schema);

// The schema shipped with the project (docs/report_schema.json).
const nlohmann::json& report_schema();

}  // namespace rbf

#endif  // RBFOURIER_REPORT_IO_HPP_
