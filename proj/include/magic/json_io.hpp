#pragma once

#include <iosfwd>
#include <string>

#include "magic/factorization.hpp"
#include "magic/labeling.hpp"
#include "magic/spectrum.hpp"

namespace magic {

// All writers emit key-sorted JSON with a trailing newline.

struct LabelingFile {
  std::int64_t k = 2;
  Label c = 0;
  EdgeLabeling labeling;
  ConstructionTrace trace;
};

std::string labeling_to_json(const LabelingFile& file);
// Throws InvalidInput on malformed input.
LabelingFile labeling_from_json(const std::string& text);
LabelingFile read_labeling_file(const std::string& path);
void write_text_file(const std::string& path, const std::string& text);

std::string spectrum_to_json(const SpectrumSet& s);
SpectrumSet spectrum_from_json(const std::string& text);

std::string factors_to_json(const FactorDecomposition& f);
FactorDecomposition factors_from_json(const std::string& text);

}  // namespace magic
