#pragma once

#include "error.hpp"
#include "permutation.hpp"
#include "perm_group.hpp"
#include "element_index.hpp"
#include "word.hpp"
#include "presentation.hpp"
#include "analysis.hpp"
#include "hom_search.hpp"
#include "group_data.hpp"
#include "automorphisms.hpp"
#include "localization.hpp"
#include "config.hpp"
#include "catalog.hpp"
#include "report.hpp"
