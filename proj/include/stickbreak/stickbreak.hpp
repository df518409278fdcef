#pragma once

// Everything: exact numbers, sequences, circle statistics, lemma verifiers
// and the experiment drivers.

#include "circle_stats.hpp"
#include "circle_value.hpp"
#include "errors.hpp"
#include "golden.hpp"
#include "point_models.hpp"
#include "radical_inverse.hpp"
#include "rational.hpp"
#include "reports.hpp"
#include "sequence.hpp"
#include "sequence_kind.hpp"
#include "window_tracker.hpp"

#include "lemma/element_matching.hpp"
#include "lemma/fibonacci.hpp"
#include "lemma/report.hpp"
#include "lemma/split_order.hpp"
#include "lemma/vdc_lemmas.hpp"

#include "experiments/fit.hpp"
#include "experiments/int_list.hpp"
#include "experiments/sweep.hpp"
#include "experiments/theorem1.hpp"
#include "experiments/verify_all.hpp"
