#pragma once

#include "celebnet/centrality.hpp"
#include "celebnet/classify.hpp"
#include "celebnet/corpus.hpp"
#include "celebnet/csv.hpp"
#include "celebnet/engagement_graph.hpp"
#include "celebnet/errors.hpp"
#include "celebnet/features.hpp"
#include "celebnet/lexicon.hpp"
#include "celebnet/linguistic.hpp"
#include "celebnet/markdown.hpp"
#include "celebnet/porter.hpp"
#include "celebnet/pos_tagger.hpp"
#include "celebnet/report.hpp"
#include "celebnet/rng.hpp"
#include "celebnet/stats.hpp"
#include "celebnet/synth.hpp"
#include "celebnet/text.hpp"
