#pragma once

#include <string>
#include <vector>

#include "fliptoep/distribution.hpp"
#include "fliptoep/grids.hpp"
#include "fliptoep/krylov.hpp"
#include "fliptoep/localize.hpp"
#include "fliptoep/matgen.hpp"
#include "fliptoep/spectra.hpp"

namespace fliptoep {

/// 17 significant digits: round-trip exact for doubles.
std::string fmt17(double v);
/// 4 significant digits for human summaries.
std::string fmt4(double v);

/// Writes content to path via a temp file and rename, so readers never see a
/// partial file.
void write_file_atomic(const std::string& path, const std::string& content);

std::string pairing_csv(const SpectralPairing& pairing);
std::string match_csv(const MatchReport& report);
std::string match_summary_json(const MatchReport& report, bool exact_grid_measure);
std::string localization_json(const LocalizationReport& report);
std::string dist_csv(const std::vector<DistReport>& reports);
std::string trace_csv(const SolveTrace& trace);
std::string coeffs_csv(const FourierCoeffs& coeffs);
std::string matrix_csv(const ToeplitzMatrix& t);
std::string matrix_header_json(const ToeplitzMatrix& t, const std::string& symbol_text);
std::string grid_csv(const Grid& grid);

}  // namespace fliptoep
