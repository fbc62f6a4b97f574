#ifndef APSK_FIGURES_HPP
#define APSK_FIGURES_HPP

#include <string>
#include <vector>

#include "apsk/config.hpp"

namespace apsk {

// Bundled experiment manifests, embedded so `reproduce` works from any
// working directory. The same JSON is checked in under configs/.
std::vector<std::string> figure_names();
const std::string& figure_config_text(const std::string& name);
FigureConfig figure_config(const std::string& name);

// Runs every series of the figure (simulated sweeps, then analytic
// curves), writes one CSV per series plus a combined SVG into out_dir,
// and returns the written paths. Output bytes depend only on the
// manifest, never on n_threads.
std::vector<std::string> reproduce_figure(const FigureConfig& fig, const std::string& out_dir,
                                          int n_threads = 0);

// Filesystem-safe series label ("(4,2)" -> "4-2").
std::string slugify(const std::string& label);

} // namespace apsk

#endif
