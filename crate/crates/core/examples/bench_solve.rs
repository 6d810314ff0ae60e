use pursuit_core::construct::*;
use pursuit_core::solver::*;
use std::time::Instant;

fn main() {
    let q = quadrangulate(&triangulate_pentagons(&dodecahedron()).unwrap()).unwrap();
    let (qp, _kites) = add_kite_diagonals(&q).unwrap();

    for (name, g) in [("Q", q.graph.clone()), ("Q'", qp.clone())] {
        let t0 = Instant::now();
        let table = solve(&g, 2, &SolveBudget::default()).unwrap();
        let dt = t0.elapsed();
        println!(
            "{name} k=2: n={} states={} cop_win={} max_time={} in {:.2?}",
            g.n(),
            table.state_count(),
            table.is_cop_win(),
            table.max_capture_time(),
            dt
        );
    }

    // Extrapolation probe for the big k=3 run: solve a mid-size corpus
    // instance at k=3 and report throughput.
    let inst = kite_instance("icosahedron", &icosahedron()).unwrap();
    let t0 = Instant::now();
    let table = solve(&inst.graph, 3, &SolveBudget::default()).unwrap();
    let dt = t0.elapsed();
    println!(
        "icosa-Q' k=3: n={} states={} cop_win={} max_time={} in {:.2?}",
        inst.graph.n(),
        table.state_count(),
        table.is_cop_win(),
        table.max_capture_time(),
        dt
    );

    let d = dodecahedron().graph;
    for k in 1..=3 {
        let table = solve(&d, k, &SolveBudget::default()).unwrap();
        println!("dodecahedron k={k}: cop_win={}", table.is_cop_win());
    }
    let t1 = solve(&qp, 1, &SolveBudget::default()).unwrap();
    println!("Q' k=1: cop_win={}", t1.is_cop_win());
    let q2 = solve(&qp, 2, &SolveBudget::default()).unwrap();
    println!(
        "Q' k=2 placement: {:?} worst-case {} half-moves",
        q2.optimal_cop_placement(),
        q2.max_capture_time()
    );

    // The full k=3 solve on Q' is ~372M states; opt in via BENCH_FULL=1.
    if std::env::var("BENCH_FULL").is_ok() {
        let t0 = Instant::now();
        let q3 = solve(&qp, 3, &SolveBudget::default()).unwrap();
        let dt = t0.elapsed();
        println!(
            "Q' k=3: states={} cop_win={} max_time={} placement={:?} in {:.2?}",
            q3.state_count(),
            q3.is_cop_win(),
            q3.max_capture_time(),
            q3.optimal_cop_placement(),
            dt
        );
    }
}
