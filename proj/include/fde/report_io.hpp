#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "fde/analysis.hpp"
#include "fde/experiment.hpp"

namespace fde {

void write_rows_csv(std::ostream& os, const std::vector<ResultRow>& rows, bool with_timing);
void write_table_csv(std::ostream& os, int table, const std::vector<TableRow>& rows, bool with_timing);
/// Header re,im,re_scaled,im_scaled; rows sorted by (re, im).
void write_spectrum_csv(std::ostream& os, const SpectrumReport& rep);
void write_spectrum_json(std::ostream& os, const SpectrumReport& rep);

/// `path` with its extension replaced by .json.
std::string sidecar_path(const std::string& path);

/// Opens `path` for writing or throws fde::Error.
void write_file(const std::string& path, const std::string& contents);

}  // namespace fde
