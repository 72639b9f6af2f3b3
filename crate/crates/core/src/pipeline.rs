//! A scripted, deterministic animation pipeline.
//!
//! Six units cooperate to produce one frame per tick:
//!
//! | unit | function           | role                                              |
//! |------|--------------------|---------------------------------------------------|
//! | A    | [`clock`]          | tick counter to time                              |
//! | B    | [`capture_image`]  | synthetic camera                                  |
//! | C    | [`frame_db`]       | frame asset lookup                                |
//! | D    | [`motion_sensor`]  | replays an [`EventTrace`] of jumps                |
//! | E    | [`animate`]        | frame information, threading [`AnimStatus`]       |
//! | F    | [`render`]         | one text line per frame                           |
//!
//! Every unit is a pure function. The only stateful one, the animation
//! generator, returns an [`Action`] over its status, and [`step`] wires the
//! units together with [`bind`], [`inject`] and [`fmap`]. [`simulate`] runs
//! `step` once per tick, feeding each tick's status into the next.
//!
//! The generator keeps every layer cycling through its frames at its own
//! period. A jump while the status is [`AnimStatus::Normal`] starts an
//! overlay that runs for `trigger_duration` ticks; jumps that arrive while an
//! overlay is running are ignored.

use std::collections::HashSet;
use std::fmt;
use std::sync::Arc;

use thiserror::Error;

use crate::calculus::{bind, fmap, get, inject, put, Action};
use crate::Time;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ModelError {
    #[error("invalid layer name `{0}`")]
    InvalidLayerName(String),
    #[error("duplicate layer name `{0}`")]
    DuplicateLayerName(String),
    #[error("layer `{0}`: period must be at least 1")]
    ZeroPeriod(String),
    #[error("layer `{0}`: frames must be at least 1")]
    ZeroFrames(String),
    #[error("trigger_duration must be at least 1")]
    ZeroTriggerDuration,
    #[error("no layers defined")]
    NoLayers,
    #[error("non-increasing jump tick {0}")]
    NonIncreasingTick(Time),
}

/// `[A-Za-z][A-Za-z0-9_]*`
pub fn is_identifier(name: &str) -> bool {
    let mut chars = name.chars();
    matches!(chars.next(), Some(c) if c.is_ascii_alphabetic())
        && chars.all(|c| c.is_ascii_alphanumeric() || c == '_')
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Layer {
    pub name: String,
    pub period: u64,
    pub frames: u64,
}

impl Layer {
    pub fn new(name: impl Into<String>, period: u64, frames: u64) -> Self {
        Layer {
            name: name.into(),
            period,
            frames,
        }
    }

    /// Frame shown at time `t`: `(t / period) mod frames`.
    pub fn frame_at(&self, t: Time) -> u64 {
        (t / self.period) % self.frames
    }
}

/// Validated pipeline configuration.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Scenario {
    layers: Vec<Layer>,
    trigger_duration: u64,
}

impl Scenario {
    pub fn new(trigger_duration: u64, layers: Vec<Layer>) -> Result<Self, ModelError> {
        if trigger_duration == 0 {
            return Err(ModelError::ZeroTriggerDuration);
        }
        if layers.is_empty() {
            return Err(ModelError::NoLayers);
        }
        let mut seen = HashSet::new();
        for layer in &layers {
            if !is_identifier(&layer.name) {
                return Err(ModelError::InvalidLayerName(layer.name.clone()));
            }
            if !seen.insert(layer.name.as_str()) {
                return Err(ModelError::DuplicateLayerName(layer.name.clone()));
            }
            if layer.period == 0 {
                return Err(ModelError::ZeroPeriod(layer.name.clone()));
            }
            if layer.frames == 0 {
                return Err(ModelError::ZeroFrames(layer.name.clone()));
            }
        }
        Ok(Scenario {
            layers,
            trigger_duration,
        })
    }

    pub fn layers(&self) -> &[Layer] {
        &self.layers
    }

    pub fn trigger_duration(&self) -> u64 {
        self.trigger_duration
    }
}

/// Ticks at which someone jumps, strictly increasing.
#[derive(Debug, Clone, Default, PartialEq, Eq, Hash)]
pub struct EventTrace {
    jump_ticks: Vec<Time>,
}

impl EventTrace {
    pub fn new(jump_ticks: Vec<Time>) -> Result<Self, ModelError> {
        if let Some(w) = jump_ticks.windows(2).find(|w| w[1] <= w[0]) {
            return Err(ModelError::NonIncreasingTick(w[1]));
        }
        Ok(EventTrace { jump_ticks })
    }

    pub fn empty() -> Self {
        EventTrace::default()
    }

    pub fn jump_ticks(&self) -> &[Time] {
        &self.jump_ticks
    }

    pub fn contains(&self, t: Time) -> bool {
        self.jump_ticks.binary_search(&t).is_ok()
    }
}

/// Internal status of the animation generator.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq, Hash)]
pub enum AnimStatus {
    #[default]
    Normal,
    Triggered {
        since: Time,
    },
}

impl AnimStatus {
    /// Drops back to `Normal` once the overlay started at `since` has run for
    /// `duration` ticks. A `since` later than `t` is treated as expired.
    fn expire(self, t: Time, duration: u64) -> Self {
        match self {
            AnimStatus::Triggered { since } => match t.checked_sub(since) {
                Some(elapsed) if elapsed < duration => self,
                _ => AnimStatus::Normal,
            },
            AnimStatus::Normal => self,
        }
    }

    fn trigger(self, t: Time, jumping: bool) -> Self {
        match self {
            AnimStatus::Normal if jumping => AnimStatus::Triggered { since: t },
            other => other,
        }
    }

    fn overlay_at(self, t: Time) -> Option<Overlay> {
        match self {
            AnimStatus::Triggered { since } => Some(Overlay {
                since,
                index: t - since,
            }),
            AnimStatus::Normal => None,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Overlay {
    pub since: Time,
    pub index: u64,
}

/// Everything the renderer needs for one tick.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct FrameInfo {
    pub t: Time,
    pub layer_indices: Vec<(String, u64)>,
    pub overlay: Option<Overlay>,
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct RenderedFrame(String);

impl RenderedFrame {
    pub fn line(&self) -> &str {
        &self.0
    }

    pub fn into_line(self) -> String {
        self.0
    }
}

impl fmt::Display for RenderedFrame {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.0)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct ImageDescriptor(pub String);

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct FrameAsset(pub String);

/// Unit A.
///
/// # Panics
///
/// If `tick * dt` overflows.
pub fn clock(tick: u64, dt: u64) -> Time {
    tick.checked_mul(dt).expect("clock overflow")
}

/// Unit B: `img@<t>`.
pub fn capture_image(t: Time) -> ImageDescriptor {
    ImageDescriptor(format!("img@{t}"))
}

/// Unit C: `<layer>#<index>`.
pub fn frame_db(layer_name: &str, index: u64) -> FrameAsset {
    FrameAsset(format!("{layer_name}#{index}"))
}

/// Unit D.
pub fn motion_sensor(trace: &EventTrace, t: Time) -> bool {
    trace.contains(t)
}

/// Unit E: frame information for time `t`.
///
/// When run on a status the action first expires a finished overlay, then
/// starts a new one if the status is `Normal` and `jumping` is set, and
/// finally reports every layer's frame plus the overlay of the resulting
/// status.
pub fn animate(sc: &Scenario, t: Time, jumping: bool) -> Action<AnimStatus, FrameInfo> {
    let layer_indices: Vec<(String, u64)> = sc
        .layers()
        .iter()
        .map(|layer| (layer.name.clone(), layer.frame_at(t)))
        .collect();
    let duration = sc.trigger_duration();
    bind(
        move |status: AnimStatus| {
            let next = status.expire(t, duration).trigger(t, jumping);
            let info = FrameInfo {
                t,
                layer_indices: layer_indices.clone(),
                overlay: next.overlay_at(t),
            };
            bind(move |()| inject(info.clone()), put(next))
        },
        get(),
    )
}

/// `<frame t="T"><layer name="N" index="I"/>...[<overlay since="S" index="J"/>]</frame>`
pub fn emit_frame_xml(fi: &FrameInfo) -> String {
    let mut xml = format!("<frame t=\"{}\">", fi.t);
    for (name, index) in &fi.layer_indices {
        xml.push_str(&format!("<layer name=\"{name}\" index=\"{index}\"/>"));
    }
    if let Some(overlay) = fi.overlay {
        xml.push_str(&format!(
            "<overlay since=\"{}\" index=\"{}\"/>",
            overlay.since, overlay.index
        ));
    }
    xml.push_str("</frame>");
    xml
}

/// Unit F: `t=<T> <name>[<I>] ... [+overlay[<J>]]`.
pub fn render(fi: &FrameInfo) -> RenderedFrame {
    let mut line = format!("t={}", fi.t);
    for (name, index) in &fi.layer_indices {
        line.push_str(&format!(" {name}[{index}]"));
    }
    if let Some(overlay) = fi.overlay {
        line.push_str(&format!(" +overlay[{}]", overlay.index));
    }
    RenderedFrame(line)
}

/// Frame information for tick time `t`, with the jump state read from `trace`.
pub fn frame_info(sc: &Scenario, trace: &EventTrace, t: Time) -> Action<AnimStatus, FrameInfo> {
    frame_info_shared(Arc::new(sc.clone()), Arc::new(trace.clone()), t)
}

fn frame_info_shared(
    sc: Arc<Scenario>,
    trace: Arc<EventTrace>,
    t: Time,
) -> Action<AnimStatus, FrameInfo> {
    bind(
        move |now: Time| animate(&sc, now, motion_sensor(&trace, now)),
        inject(t),
    )
}

/// One tick of the whole pipeline: the generator bound onto the injected
/// time, with the renderer mapped over its output.
pub fn step(sc: &Scenario, trace: &EventTrace, t: Time) -> Action<AnimStatus, RenderedFrame> {
    step_shared(Arc::new(sc.clone()), Arc::new(trace.clone()), t)
}

fn step_shared(
    sc: Arc<Scenario>,
    trace: Arc<EventTrace>,
    t: Time,
) -> Action<AnimStatus, RenderedFrame> {
    fmap(|fi: FrameInfo| render(&fi), frame_info_shared(sc, trace, t))
}

/// Runs `n_ticks` ticks at times `clock(i, dt)`, starting from `Normal`.
pub fn simulate(sc: &Scenario, trace: &EventTrace, n_ticks: u64, dt: u64) -> Vec<RenderedFrame> {
    let (sc, trace) = (Arc::new(sc.clone()), Arc::new(trace.clone()));
    thread_ticks(n_ticks, dt, |t| {
        step_shared(Arc::clone(&sc), Arc::clone(&trace), t)
    })
}

/// Like [`simulate`] but yields the frame information instead of rendered lines.
pub fn simulate_frames(sc: &Scenario, trace: &EventTrace, n_ticks: u64, dt: u64) -> Vec<FrameInfo> {
    let (sc, trace) = (Arc::new(sc.clone()), Arc::new(trace.clone()));
    thread_ticks(n_ticks, dt, |t| {
        frame_info_shared(Arc::clone(&sc), Arc::clone(&trace), t)
    })
}

fn thread_ticks<A>(
    n_ticks: u64,
    dt: u64,
    mut tick: impl FnMut(Time) -> Action<AnimStatus, A>,
) -> Vec<A> {
    let mut status = AnimStatus::Normal;
    let mut out = Vec::with_capacity(usize::try_from(n_ticks).unwrap_or(0));
    for i in 0..n_ticks {
        let result = tick(clock(i, dt)).run(status);
        status = result.state;
        out.push(result.value);
    }
    out
}

/// Joins rendered frames into a log, one line-feed-terminated line per frame.
pub fn frame_log(frames: &[RenderedFrame]) -> String {
    frames.iter().map(|f| format!("{f}\n")).collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::calculus::run;

    fn birds() -> Scenario {
        Scenario::new(2, vec![Layer::new("birds", 2, 4)]).unwrap()
    }

    fn info(t: Time, layers: &[(&str, u64)], overlay: Option<(Time, u64)>) -> FrameInfo {
        FrameInfo {
            t,
            layer_indices: layers.iter().map(|(n, i)| (n.to_string(), *i)).collect(),
            overlay: overlay.map(|(since, index)| Overlay { since, index }),
        }
    }

    #[test]
    fn stub_units() {
        assert_eq!(clock(0, 1), 0);
        assert_eq!(clock(3, 1), 3);
        assert_eq!(clock(4, 2), 8);
        assert_eq!(capture_image(0).0, "img@0");
        assert_eq!(capture_image(7), capture_image(7));
        assert_eq!(frame_db("birds", 1).0, "birds#1");
        assert_eq!(frame_db("frogs", 0), frame_db("frogs", 0));
    }

    #[test]
    fn motion_sensor_membership() {
        let trace = EventTrace::new(vec![3]).unwrap();
        assert!(motion_sensor(&trace, 3));
        assert!(!motion_sensor(&trace, 4));
        assert!(!motion_sensor(&EventTrace::empty(), 0));
    }

    #[test]
    fn animate_triggers() {
        let out = run(&animate(&birds(), 3, true), AnimStatus::Normal);
        assert_eq!(out.value, info(3, &[("birds", 1)], Some((3, 0))));
        assert_eq!(out.state, AnimStatus::Triggered { since: 3 });
    }

    #[test]
    fn animate_expires() {
        let out = run(
            &animate(&birds(), 5, false),
            AnimStatus::Triggered { since: 3 },
        );
        assert_eq!(out.value.overlay, None);
        assert_eq!(out.state, AnimStatus::Normal);
    }

    #[test]
    fn animate_at_zero() {
        let sc = Scenario::new(3, vec![Layer::new("a", 2, 3), Layer::new("b", 5, 1)]).unwrap();
        let out = run(&animate(&sc, 0, false), AnimStatus::Normal);
        assert_eq!(out.value, info(0, &[("a", 0), ("b", 0)], None));
        assert_eq!(out.state, AnimStatus::Normal);
    }

    #[test]
    fn jump_during_overlay_is_ignored() {
        let sc = Scenario::new(3, vec![Layer::new("a", 1, 2)]).unwrap();
        let out = run(&animate(&sc, 5, true), AnimStatus::Triggered { since: 4 });
        assert_eq!(out.state, AnimStatus::Triggered { since: 4 });
        assert_eq!(out.value.overlay, Some(Overlay { since: 4, index: 1 }));
    }

    #[test]
    fn expiry_happens_before_retrigger() {
        // The overlay from t=3 ends at t=5, and a jump at t=5 starts a new one.
        let out = run(
            &animate(&birds(), 5, true),
            AnimStatus::Triggered { since: 3 },
        );
        assert_eq!(out.state, AnimStatus::Triggered { since: 5 });
        assert_eq!(out.value.overlay, Some(Overlay { since: 5, index: 0 }));
    }

    #[test]
    fn xml_output() {
        assert_eq!(
            emit_frame_xml(&info(0, &[("birds", 0)], None)),
            r#"<frame t="0"><layer name="birds" index="0"/></frame>"#
        );
        assert_eq!(
            emit_frame_xml(&info(3, &[("birds", 1)], Some((3, 0)))),
            r#"<frame t="3"><layer name="birds" index="1"/><overlay since="3" index="0"/></frame>"#
        );
        assert_eq!(
            emit_frame_xml(&info(1, &[("birds", 0), ("frogs", 1)], None)),
            r#"<frame t="1"><layer name="birds" index="0"/><layer name="frogs" index="1"/></frame>"#
        );
    }

    #[test]
    fn rendered_lines() {
        assert_eq!(
            render(&info(0, &[("birds", 0)], None)).line(),
            "t=0 birds[0]"
        );
        assert_eq!(
            render(&info(3, &[("birds", 1)], Some((3, 0)))).line(),
            "t=3 birds[1] +overlay[0]"
        );
        assert_eq!(
            render(&info(4, &[("birds", 0), ("frogs", 1)], Some((3, 1)))).line(),
            "t=4 birds[0] frogs[1] +overlay[1]"
        );
    }

    #[test]
    fn step_examples() {
        let trace = EventTrace::new(vec![3]).unwrap();
        let out = run(&step(&birds(), &trace, 3), AnimStatus::Normal);
        assert_eq!(out.value.line(), "t=3 birds[1] +overlay[0]");
        assert_eq!(out.state, AnimStatus::Triggered { since: 3 });

        let quiet = run(&step(&birds(), &EventTrace::empty(), 0), AnimStatus::Normal);
        assert_eq!(quiet.value.line(), "t=0 birds[0]");
        assert_eq!(quiet.state, AnimStatus::Normal);

        let again = run(&step(&birds(), &trace, 3), AnimStatus::Normal);
        assert_eq!(out, again);
    }

    #[test]
    fn step_is_fmap_render_over_bound_animate() {
        let sc = birds();
        let trace = EventTrace::new(vec![1, 4]).unwrap();
        for t in 0..8 {
            let (sc2, trace2) = (sc.clone(), trace.clone());
            let spelled = fmap(
                |fi: FrameInfo| render(&fi),
                bind(
                    move |now: Time| animate(&sc2, now, motion_sensor(&trace2, now)),
                    inject(t),
                ),
            );
            for status in [
                AnimStatus::Normal,
                AnimStatus::Triggered {
                    since: t.saturating_sub(1),
                },
                AnimStatus::Triggered { since: t },
            ] {
                assert_eq!(run(&step(&sc, &trace, t), status), run(&spelled, status));
            }
        }
    }

    #[test]
    fn six_tick_fixture() {
        let trace = EventTrace::new(vec![3]).unwrap();
        let lines: Vec<String> = simulate(&birds(), &trace, 6, 1)
            .into_iter()
            .map(RenderedFrame::into_line)
            .collect();
        assert_eq!(
            lines,
            [
                "t=0 birds[0]",
                "t=1 birds[0]",
                "t=2 birds[1]",
                "t=3 birds[1] +overlay[0]",
                "t=4 birds[2] +overlay[1]",
                "t=5 birds[2]",
            ]
        );
    }

    #[test]
    fn zero_ticks_and_empty_trace() {
        assert!(simulate(&birds(), &EventTrace::empty(), 0, 1).is_empty());
        let frames = simulate(&birds(), &EventTrace::empty(), 40, 3);
        assert!(frames.iter().all(|f| !f.line().contains("+overlay")));
        assert_eq!(frames[2].line(), "t=6 birds[3]");
    }

    #[test]
    fn frame_log_terminates_lines() {
        let frames = simulate(&birds(), &EventTrace::empty(), 2, 1);
        assert_eq!(frame_log(&frames), "t=0 birds[0]\nt=1 birds[0]\n");
    }

    #[test]
    fn scenario_validation() {
        assert_eq!(
            Scenario::new(0, vec![Layer::new("a", 1, 1)]),
            Err(ModelError::ZeroTriggerDuration)
        );
        assert_eq!(Scenario::new(1, vec![]), Err(ModelError::NoLayers));
        assert_eq!(
            Scenario::new(1, vec![Layer::new("a", 1, 1), Layer::new("a", 2, 2)]),
            Err(ModelError::DuplicateLayerName("a".into()))
        );
        assert_eq!(
            Scenario::new(1, vec![Layer::new("9a", 1, 1)]),
            Err(ModelError::InvalidLayerName("9a".into()))
        );
        assert_eq!(
            Scenario::new(1, vec![Layer::new("a", 0, 1)]),
            Err(ModelError::ZeroPeriod("a".into()))
        );
        assert_eq!(
            Scenario::new(1, vec![Layer::new("a", 1, 0)]),
            Err(ModelError::ZeroFrames("a".into()))
        );
    }

    #[test]
    fn trace_validation() {
        assert_eq!(
            EventTrace::new(vec![5, 3]),
            Err(ModelError::NonIncreasingTick(3))
        );
        assert_eq!(
            EventTrace::new(vec![1, 1]),
            Err(ModelError::NonIncreasingTick(1))
        );
        assert!(EventTrace::new(vec![0, 2, 9]).is_ok());
    }

    #[test]
    fn identifiers() {
        assert!(is_identifier("birds"));
        assert!(is_identifier("B_2"));
        assert!(!is_identifier(""));
        assert!(!is_identifier("_x"));
        assert!(!is_identifier("a-b"));
    }
}
