/* Exercises libhopest through its C header only. */

#include <math.h>
#include <stdio.h>
#include <string.h>

#include "hopest/hopest.h"

static int failures = 0;

#define EXPECT(cond)                                                  \
  do {                                                                \
    if (!(cond)) {                                                    \
      fprintf(stderr, "%s:%d: expected %s\n", __FILE__, __LINE__, #cond); \
      ++failures;                                                     \
    }                                                                 \
  } while (0)

#define EXPECT_OK(call) EXPECT((call) == HOPEST_OK)

static void test_model(void) {
  const double nearest[2] = {1.0, 1.0};
  const hopest_edge edge = {1, 3, 1.0};
  hopest_model* m = NULL;
  double h[9];
  double small[4];
  hopest_edge edges[2];
  char* json = NULL;
  hopest_model* back = NULL;

  EXPECT_OK(hopest_model_create(3, nearest, 0.1, &edge, 1, &m));
  EXPECT(hopest_model_sites(m) == 3);
  EXPECT(hopest_model_epsilon(m) == 0.1);
  EXPECT_OK(hopest_model_hamiltonian(m, h, 9));
  EXPECT(h[1] == 1.0 && h[2] == 0.1 && h[6] == 0.1 && h[0] == 0.0);
  EXPECT(hopest_model_hamiltonian(m, small, 4) == HOPEST_ERR_CAPACITY);
  EXPECT(strlen(hopest_last_error()) > 0);
  EXPECT(hopest_model_edges(m, edges, 2) == 1);
  EXPECT(edges[0].i == 1 && edges[0].j == 3 && edges[0].weight == 1.0);

  EXPECT_OK(hopest_model_to_json(m, &json));
  EXPECT_OK(hopest_model_from_json(json, &back));
  EXPECT(hopest_model_sites(back) == 3);
  hopest_string_free(json);
  hopest_model_free(back);
  hopest_model_free(m);

  {
    const double bad[2] = {1.0, -0.5};
    hopest_model* untouched = NULL;
    EXPECT(hopest_model_create(3, bad, 0.0, NULL, 0, &untouched) ==
           HOPEST_ERR_VALIDATION);
    EXPECT(untouched == NULL);
    EXPECT(strstr(hopest_last_error(), "2") != NULL);
  }
  {
    const hopest_edge close = {1, 2, 1.0};
    hopest_model* untouched = NULL;
    EXPECT(hopest_model_create(3, nearest, 0.1, &close, 1, &untouched) ==
           HOPEST_ERR_VALIDATION);
  }
  EXPECT(hopest_model_from_json("{not json", &back) == HOPEST_ERR_VALIDATION);
  hopest_model_free(NULL);
}

static void test_spectrum_and_reconstruction(void) {
  const double nearest[4] = {1.0, 1.0, 1.0, 1.0};
  const double d[3] = {0.5, 0.5, 0.5};
  hopest_model* m = NULL;
  hopest_spectrum* s = NULL;
  hopest_reconstruction* r = NULL;
  double e[5], w1[5], w2[5], c[4], dd[3], delta[4], m2 = 0.0;
  char* csv = NULL;
  size_t i;

  EXPECT_OK(hopest_model_create_nnn(5, nearest, d, 0.01, &m));
  EXPECT_OK(hopest_spectrum_compute(m, &s));
  EXPECT(hopest_spectrum_dim(s) == 5);
  EXPECT_OK(hopest_spectrum_eigenvalues(s, e, 5));
  EXPECT(e[0] <= e[1] && e[3] <= e[4]);
  EXPECT_OK(hopest_spectrum_overlaps(s, 1, w1, 5));
  EXPECT_OK(hopest_spectrum_overlaps(s, 2, w2, 5));
  EXPECT(hopest_spectrum_overlaps(s, 0, w1, 5) == HOPEST_ERR_VALIDATION);
  EXPECT_OK(hopest_spectrum_moment(s, 1, 2, &m2));
  EXPECT(fabs(m2 - (1.0 + 0.01 * 0.01 * 0.25)) < 1e-12);
  EXPECT_OK(hopest_spectrum_csv(s, &csv));
  EXPECT(strncmp(csv, "k,e_k,w1_k,w2_k\n", 16) == 0);
  hopest_string_free(csv);

  EXPECT_OK(hopest_reconstruct_spectrum_next_nearest(s, 0.01, &r));
  EXPECT(hopest_reconstruction_count(r) == 4);
  EXPECT(hopest_reconstruction_second_count(r) == 3);
  EXPECT(hopest_reconstruction_breakdown(r) == 0);
  EXPECT_OK(hopest_reconstruction_couplings(r, c, 4));
  EXPECT_OK(hopest_reconstruction_second_couplings(r, dd, 3));
  for (i = 0; i < 4; ++i) EXPECT(fabs(c[i] - 1.0) < 1e-7);
  for (i = 0; i < 3; ++i) EXPECT(fabs(dd[i] - 0.5) < 1e-7);
  EXPECT(hopest_reconstruction_second_couplings(r, dd, 2) == HOPEST_ERR_CAPACITY);
  hopest_reconstruction_free(r);

  EXPECT_OK(hopest_reconstruct_spectrum_nearest(s, 4, &r));
  EXPECT_OK(hopest_reconstruction_errors(r, nearest, 4, delta, 4));
  EXPECT(fabs(delta[0] / (0.01 * 0.5) - 1.0) < 1e-8);
  hopest_reconstruction_free(r);

  /* array form agrees to rounding */
  EXPECT_OK(hopest_reconstruct_nearest(e, w1, 5, 4, &r));
  EXPECT_OK(hopest_reconstruction_couplings(r, c, 4));
  EXPECT(fabs(c[0] * c[0] - 1.0 - 0.25e-4) < 1e-12);
  EXPECT_OK(hopest_estimation_errors(nearest, 4, c, 4, delta));
  hopest_reconstruction_free(r);

  EXPECT(hopest_reconstruct_next_nearest(e, w1, w2, 5, 0.0, &r) ==
         HOPEST_ERR_VALIDATION);
  EXPECT(hopest_reconstruct_nearest(e, w1, 5, 5, &r) == HOPEST_ERR_VALIDATION);

  hopest_spectrum_free(s);
  hopest_model_free(m);

  {
    const double asym[4] = {0.0, 1.0, 2.0, 0.0};
    const double sym[4] = {0.0, 1.0, 1.0, 0.0};
    EXPECT(hopest_spectrum_from_matrix(2, asym, &s) == HOPEST_ERR_VALIDATION);
    EXPECT_OK(hopest_spectrum_from_matrix(2, sym, &s));
    EXPECT_OK(hopest_spectrum_eigenvalues(s, e, 2));
    EXPECT(fabs(e[0] + 1.0) < 1e-15 && fabs(e[1] - 1.0) < 1e-15);
    hopest_spectrum_free(s);
  }
}

static void test_graph(void) {
  const size_t path[8] = {1, 2, 2, 3, 3, 4, 4, 5};
  const size_t start = 1, middle = 3;
  hopest_graph* g = NULL;
  unsigned char blue[5];
  int verdict = -1;
  size_t z = 0;

  EXPECT_OK(hopest_graph_create(5, path, 4, &g));
  EXPECT(hopest_graph_vertices(g) == 5);
  EXPECT_OK(hopest_zero_forcing_closure(g, &start, 1, blue, 5));
  EXPECT(blue[0] && blue[1] && blue[2] && blue[3] && blue[4]);
  EXPECT_OK(hopest_zero_forcing_closure(g, &middle, 1, blue, 5));
  EXPECT(!blue[0] && blue[2] && !blue[4]);
  EXPECT_OK(hopest_is_zero_forcing_set(g, &start, 1, &verdict));
  EXPECT(verdict == 1);
  EXPECT_OK(hopest_minimum_zero_forcing_number(g, 0, &z));
  EXPECT(z == 1);
  EXPECT(hopest_minimum_zero_forcing_number(g, 4, &z) == HOPEST_ERR_UNSUPPORTED);
  EXPECT(hopest_zero_forcing_closure(g, &start, 1, blue, 3) == HOPEST_ERR_CAPACITY);
  hopest_graph_free(g);

  EXPECT_OK(hopest_graph_from_json(
      "{\"n_vertices\": 4, \"edges\": [[1,2],[2,3],[3,4],[4,1]]}", &g));
  EXPECT_OK(hopest_is_zero_forcing_set(g, &start, 1, &verdict));
  EXPECT(verdict == 0);
  hopest_graph_free(g);
  {
    const size_t loop[2] = {2, 2};
    EXPECT(hopest_graph_create(3, loop, 1, &g) == HOPEST_ERR_VALIDATION);
  }
}

static void test_analysis(void) {
  const double deltas[3] = {0.1, 0.2, 0.05};
  size_t lc = 0;
  char* resolved = NULL;
  hopest_table* t = NULL;
  const char* cfg =
      "{\"master_seed\": 5, \"instances\": 8, \"n_sites\": 10,"
      " \"epsilon_grid\": [0, 0.001, 0.05]}";

  EXPECT(fabs(hopest_ansatz_bound(1, 7.0 / 6.0, 1e-4, 1.05) - 1.05e-4) < 1e-18);
  EXPECT_OK(hopest_critical_length(deltas, 3, 4, 0.122, &lc));
  EXPECT(lc == 2);
  EXPECT(hopest_critical_length(deltas, 3, 4, 0.0, &lc) == HOPEST_ERR_VALIDATION);

  EXPECT_OK(hopest_config_resolve(cfg, &resolved));
  EXPECT(strstr(resolved, "\"coupling_low\"") != NULL);
  hopest_string_free(resolved);
  EXPECT(hopest_config_resolve("{\"bogus\": 1}", &resolved) == HOPEST_ERR_VALIDATION);

  EXPECT_OK(hopest_error_profile(cfg, 0.0, 2, &t));
  EXPECT(hopest_table_rows(t) == 9);
  EXPECT(hopest_table_columns(t) == 5);
  EXPECT(strcmp(hopest_table_column_name(t, 1), "mean_delta") == 0);
  EXPECT(hopest_table_column_name(t, 9) == NULL);
  EXPECT(hopest_table_value(t, 0, 1) < 1e-8);
  hopest_table_free(t);

  EXPECT_OK(hopest_critical_length_sweep(cfg, 0.122, 3, &t));
  EXPECT(hopest_table_rows(t) == 3);
  EXPECT(hopest_table_value(t, 0, 2) == 10.0);
  {
    char* csv = NULL;
    char* json = NULL;
    EXPECT_OK(hopest_table_csv(t, 1, &csv));
    EXPECT(strncmp(csv, "epsilon,n_sites,mean_Lc,std_Lc,n_excluded\n", 42) == 0);
    EXPECT_OK(hopest_table_json(t, &json));
    EXPECT(json[0] == '[');
    hopest_string_free(csv);
    hopest_string_free(json);
  }
  hopest_table_free(t);

  EXPECT_OK(hopest_topology_compare(
      cfg, "[{\"label\": \"nnn\", \"topology\": \"nnn\"},"
           " {\"label\": \"rand\", \"topology\": \"random:8\"}]",
      1e-3, 1, &t));
  EXPECT(hopest_table_rows(t) == 18);
  EXPECT(isnan(hopest_table_value(t, 0, 0)));
  hopest_table_free(t);
  EXPECT(hopest_topology_compare(cfg, "[]", 1e-3, 1, &t) == HOPEST_ERR_VALIDATION);
  EXPECT(hopest_error_profile("{\"n_sites\": 1}", 0.0, 1, &t) == HOPEST_ERR_VALIDATION);

  {
    hopest_model* a = NULL;
    hopest_model* b = NULL;
    double ca[9], cb[9];
    EXPECT_OK(hopest_model_sample(cfg, 3, 1e-3, &a));
    EXPECT_OK(hopest_model_sample(cfg, 3, 1e-3, &b));
    EXPECT_OK(hopest_model_couplings(a, ca, 9));
    EXPECT_OK(hopest_model_couplings(b, cb, 9));
    EXPECT(memcmp(ca, cb, sizeof ca) == 0);
    hopest_model_free(a);
    hopest_model_free(b);
  }
}

int main(void) {
  EXPECT(strlen(hopest_version()) > 0);
  EXPECT(strcmp(hopest_status_name(HOPEST_ERR_CAPACITY), "buffer too small") == 0);
  EXPECT(strcmp(hopest_status_name((hopest_status)99), "unknown status") == 0);
  test_model();
  test_spectrum_and_reconstruction();
  test_graph();
  test_analysis();
  if (failures) {
    fprintf(stderr, "%d C API expectation(s) failed\n", failures);
    return 1;
  }
  puts("C API: all expectations met");
  return 0;
}
