#pragma once

// Weak-supervision text-mining toolkit for fashion attributes in
// social-media posts: corpus ingestion and normalization, noise statistics,
// embedding-based and edit-distance extraction, labeling-function
// combination via per-class generative models, a noise-aware text CNN, and
// the evaluation metrics to judge all of it.

#include "fashmine/classes.hpp"
#include "fashmine/common.hpp"
#include "fashmine/config.hpp"
#include "fashmine/corpus.hpp"
#include "fashmine/embeddings.hpp"
#include "fashmine/errors.hpp"
#include "fashmine/evaluation.hpp"
#include "fashmine/extract.hpp"
#include "fashmine/lemmatize.hpp"
#include "fashmine/metrics.hpp"
#include "fashmine/ontology.hpp"
#include "fashmine/segment.hpp"
#include "fashmine/stats.hpp"
#include "fashmine/textcnn.hpp"
#include "fashmine/token.hpp"
#include "fashmine/tokenize.hpp"
#include "fashmine/unicode.hpp"
#include "fashmine/weaklabel.hpp"
#include "fashmine/wordlists.hpp"
