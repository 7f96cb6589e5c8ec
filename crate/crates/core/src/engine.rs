//! Synchronous simulation loop.
//!
//! Each step runs five phases in lock-step for all agents:
//!
//! 1. every agent broadcasts its previous strategy through the noisy channel;
//! 2. every agent decides from its last gain, its inbox sum and its gene;
//! 3. all actions are applied at once;
//! 4. powers are recomputed from the new allocation;
//! 5. gains against the previous powers are stored for the next step.
//!
//! Random draws come from a single dynamics stream in a fixed order: channel
//! draws receiver-major with senders ascending, then decision draws by agent id.

use rand::Rng;

use crate::decision::{init_genes, AgentRecord};
use crate::error::{Error, Result};
use crate::network::{self, broadcast, CommGraph};
use crate::params::{Strategy, ValidatedParams};
use crate::physical::{exact_gain, Circuit};
use crate::rng::{substream, SimRng, Stream};

/// Initial allocations are redrawn at most this many times.
pub const MAX_INIT_DRAWS: usize = 1000;

/// Snapshot of the whole system at one step.
#[derive(Debug, Clone, PartialEq)]
pub struct StepFrame {
    pub t: usize,
    pub strategies: Vec<Strategy>,
    pub a: Vec<u64>,
    pub power: Vec<f64>,
    pub n: u64,
    pub a_avg: f64,
}

impl StepFrame {
    fn from_agents(t: usize, agents: &[AgentRecord]) -> Self {
        let n: u64 = agents.iter().map(|r| r.a).sum();
        StepFrame {
            t,
            strategies: agents.iter().map(|r| r.strategy).collect(),
            a: agents.iter().map(|r| r.a).collect(),
            power: agents.iter().map(|r| r.last_power).collect(),
            n,
            a_avg: n as f64 / agents.len() as f64,
        }
    }

    pub fn count(&self, s: Strategy) -> usize {
        self.strategies.iter().filter(|&&x| x == s).count()
    }

    pub fn total_power(&self) -> f64 {
        self.power.iter().sum()
    }
}

/// Full trace of one run; `frames[0]` is the initial condition.
#[derive(Debug, Clone, PartialEq)]
pub struct RunResult {
    pub params: ValidatedParams,
    pub frames: Vec<StepFrame>,
    pub genes: Vec<f64>,
    pub graph: CommGraph,
}

/// Draw the starting allocation: each agent gets a uniform count in
/// `[1, floor(mu)]`, redrawn as a whole until the system sits strictly below
/// its optimum (`n < N * mu`).
pub fn init_state<R: Rng + ?Sized>(
    circuit: &Circuit,
    genes: &[f64],
    rng: &mut R,
) -> Result<(Vec<AgentRecord>, StepFrame)> {
    let n_agents = circuit.n_agents();
    assert_eq!(genes.len(), n_agents, "one gene per agent");
    let upper = (circuit.mu().floor() as u64).max(1);
    let optimum = circuit.optimal_total();
    for _ in 0..MAX_INIT_DRAWS {
        let a: Vec<u64> = (0..n_agents).map(|_| rng.gen_range(1..=upper)).collect();
        let n: u64 = a.iter().sum();
        if (n as f64) < optimum {
            let agents: Vec<AgentRecord> = a
                .iter()
                .zip(genes)
                .enumerate()
                .map(|(id, (&ai, &gene))| AgentRecord::new(id, ai, gene, circuit.power_unchecked(ai, n)))
                .collect();
            let frame = StepFrame::from_agents(0, &agents);
            return Ok((agents, frame));
        }
    }
    Err(Error::InitAborted {
        attempts: MAX_INIT_DRAWS,
    })
}

/// Advance every agent by one synchronous round and return the new frame.
pub fn step<R: Rng + ?Sized>(
    agents: &mut [AgentRecord],
    graph: &CommGraph,
    circuit: &Circuit,
    lambda_min: f64,
    p_err: f64,
    rng: &mut R,
    t: usize,
) -> StepFrame {
    let states: Vec<Strategy> = agents.iter().map(|r| r.strategy).collect();
    let inbox = broadcast(&states, graph, p_err, rng);

    let decisions: Vec<Strategy> = agents
        .iter()
        .map(|r| r.decide(inbox.sum(r.id), lambda_min, rng))
        .collect();
    for (record, d) in agents.iter_mut().zip(decisions) {
        record.apply(d);
    }

    let n: u64 = agents.iter().map(|r| r.a).sum();
    for record in agents.iter_mut() {
        let power = circuit.power_unchecked(record.a, n);
        // last_power > 0 because every agent holds a resistor
        record.last_gain = exact_gain(power, record.last_power).expect("positive power");
        record.last_power = power;
    }
    StepFrame::from_agents(t, agents)
}

/// A running system: graph, agents and the dynamics stream.
#[derive(Debug, Clone)]
pub struct Simulation {
    params: ValidatedParams,
    circuit: Circuit,
    graph: CommGraph,
    agents: Vec<AgentRecord>,
    genes: Vec<f64>,
    rng: SimRng,
    t: usize,
}

impl Simulation {
    /// Build the graph, genes and initial allocation from the seed.
    pub fn new(params: &ValidatedParams) -> Result<Self> {
        let p = params.params();
        let graph = network::build(p.topology, p.n_agents, &mut substream(p.seed, Stream::Graph))?;
        let genes = init_genes(p.n_agents, &mut substream(p.seed, Stream::Genes));
        let circuit = params.circuit();
        let (agents, _) = init_state(&circuit, &genes, &mut substream(p.seed, Stream::InitialAllocation))?;
        Ok(Simulation {
            params: params.clone(),
            circuit,
            graph,
            agents,
            genes,
            rng: substream(p.seed, Stream::Dynamics),
            t: 0,
        })
    }

    /// Assemble a system from hand-built parts, e.g. a test fixture.
    pub fn from_parts(params: &ValidatedParams, graph: CommGraph, agents: Vec<AgentRecord>, rng: SimRng) -> Result<Self> {
        if graph.len() != params.n_agents() || agents.len() != params.n_agents() {
            return Err(Error::domain("graph, agents and N disagree"));
        }
        if agents.iter().enumerate().any(|(i, r)| r.id != i || r.a == 0) {
            return Err(Error::domain("agent ids must be 0..N and every agent needs a resistor"));
        }
        let genes = agents.iter().map(|r| r.gene).collect();
        Ok(Simulation {
            params: params.clone(),
            circuit: params.circuit(),
            graph,
            agents,
            genes,
            rng,
            t: 0,
        })
    }

    pub fn agents(&self) -> &[AgentRecord] {
        &self.agents
    }

    pub fn graph(&self) -> &CommGraph {
        &self.graph
    }

    pub fn time(&self) -> usize {
        self.t
    }

    pub fn frame(&self) -> StepFrame {
        StepFrame::from_agents(self.t, &self.agents)
    }

    pub fn step(&mut self) -> StepFrame {
        self.t += 1;
        let p = self.params.params();
        step(
            &mut self.agents,
            &self.graph,
            &self.circuit,
            p.lambda_min,
            p.p_err,
            &mut self.rng,
            self.t,
        )
    }

    /// Run the configured number of steps and collect the full trace.
    pub fn run_to_end(mut self) -> RunResult {
        let steps = self.params.params().steps;
        let mut frames = Vec::with_capacity(steps + 1);
        frames.push(self.frame());
        while self.t < steps {
            frames.push(self.step());
        }
        RunResult {
            params: self.params,
            frames,
            genes: self.genes,
            graph: self.graph,
        }
    }
}

/// One complete run; a pure function of the parameters and seed.
pub fn run(params: &ValidatedParams) -> Result<RunResult> {
    Ok(Simulation::new(params)?.run_to_end())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::params::{SystemParams, Topology};

    fn small(n: usize, steps: usize, seed: u64) -> ValidatedParams {
        SystemParams {
            n_agents: n,
            steps,
            seed,
            ..SystemParams::default()
        }
        .validate()
        .unwrap()
    }

    #[test]
    fn initial_state_sits_below_optimum() {
        for seed in 0..50 {
            let p = small(10, 1, seed);
            let sim = Simulation::new(&p).unwrap();
            let f = sim.frame();
            assert!((f.n as f64) < 10.0 * p.mu());
            assert!(f.a.iter().all(|&a| (1..=100).contains(&a)));
            assert!(f.strategies.iter().all(|&s| s == Strategy::Ignore));
            assert!(sim.agents().iter().all(|r| r.last_gain == f64::NEG_INFINITY));
        }
    }

    #[test]
    fn degenerate_mu_aborts() {
        let p = SystemParams {
            n_agents: 5,
            r_unit: 2.0,
            r_source: 2.0,
            ..SystemParams::default()
        }
        .validate()
        .unwrap();
        let err = Simulation::new(&p).unwrap_err();
        assert!(matches!(err, Error::InitAborted { attempts: MAX_INIT_DRAWS }));
    }

    #[test]
    fn same_seed_same_initial_frame() {
        let p = small(30, 1, 5);
        assert_eq!(Simulation::new(&p).unwrap().frame(), Simulation::new(&p).unwrap().frame());
    }

    #[test]
    fn fixed_point_when_everyone_is_content() {
        let p = SystemParams {
            n_agents: 4,
            p_err: 0.0,
            ..SystemParams::default()
        }
        .validate()
        .unwrap();
        let circuit = p.circuit();
        let a = [3u64, 5, 7, 9];
        let n: u64 = a.iter().sum();
        let agents = a
            .iter()
            .enumerate()
            .map(|(i, &ai)| AgentRecord {
                id: i,
                a: ai,
                strategy: Strategy::Ignore,
                gene: 0.5,
                last_power: circuit.power(ai, n).unwrap(),
                last_gain: 1.0,
            })
            .collect();
        let mut sim = Simulation::from_parts(&p, network::ring(4).unwrap(), agents, substream(0, Stream::Dynamics)).unwrap();
        let before = sim.frame();
        let after = sim.step();
        assert_eq!(after.a, before.a);
        assert_eq!(after.strategies, before.strategies);
        assert_eq!(after.power, before.power);
    }

    #[test]
    fn frames_respect_invariants() {
        for topology in [
            Topology::Ring,
            Topology::WattsStrogatz { k: 4, beta: 0.5 },
            Topology::BarabasiAlbert { m: 2 },
        ] {
            let p = SystemParams {
                n_agents: 40,
                steps: 300,
                topology,
                p_err: 0.05,
                seed: 11,
                ..SystemParams::default()
            }
            .validate()
            .unwrap();
            let r = run(&p).unwrap();
            assert_eq!(r.frames.len(), 301);
            for w in r.frames.windows(2) {
                let (prev, next) = (&w[0], &w[1]);
                assert_eq!(next.t, prev.t + 1);
                assert!(next.n >= 40);
                assert_eq!(next.n, next.a.iter().sum::<u64>());
                for i in 0..40 {
                    assert!(next.a[i] >= 1);
                    assert!(next.a[i].abs_diff(prev.a[i]) <= 1);
                    let expect = p.circuit().power(next.a[i], next.n).unwrap();
                    assert_eq!(next.power[i], expect);
                }
            }
        }
    }

    #[test]
    fn huge_threshold_stays_bounded() {
        let p = SystemParams {
            n_agents: 10,
            steps: 500,
            lambda_min: 10.0,
            seed: 3,
            ..SystemParams::default()
        }
        .validate()
        .unwrap();
        let r = run(&p).unwrap();
        for f in &r.frames {
            assert!(f.a.iter().all(|&a| a >= 1 && a <= 100 + 500));
        }
    }

    #[test]
    fn replay_is_identical() {
        let p = small(10, 100, 42);
        assert_eq!(run(&p).unwrap(), run(&p).unwrap());
    }
}
