/*
 * Copyright 2026 The monocrystal Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *      http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

/* Compiled as C to keep the public header C-clean. */

#include <stdio.h>
#include <string.h>

#include "monocrystal/monocrystal.h"

int main(void) {
  mc_session* session = NULL;
  mc_product* product = NULL;
  mc_document* doc = NULL;
  int failures = 0;

  if (mc_session_create(2, &session) != MC_OK) return 1;
  if (mc_product_decompose(session, 1, 1, 3, &product) != MC_OK) return 1;
  if (mc_product_component_count(product) != 3) ++failures;
  if (mc_product_element_count(product) != 16) ++failures;
  if (!mc_product_agreement(product)) ++failures;
  if (mc_product_render(product, MC_FORMAT_JSON, &doc) != MC_OK) return 1;
  if (mc_document_data(doc)[mc_document_size(doc) - 1] != '\n') ++failures;
  if (strlen(mc_document_data(doc)) != mc_document_size(doc)) ++failures;
  mc_document_destroy(doc);
  mc_product_destroy(product);
  mc_session_destroy(session);
  if (failures) fprintf(stderr, "%d checks failed\n", failures);
  return failures ? 1 : 0;
}
