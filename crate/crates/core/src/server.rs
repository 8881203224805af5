//! HTTP API for refinement dialogues.
//!
//! ```text
//! GET  /api/facts                 -> [{index, rendered}]
//! POST /api/session               {"fact": 0}
//! POST /api/session/{id}/ask      {"operator": "WHICH_PART", "slot": "in"}
//! GET  /api/session/{id}
//! ```
//!
//! Errors are `{"error": <code>, "message": <text>}` with 400 for malformed
//! bodies, 404 for unknown facts or sessions, and 409 for dialogue errors.

use std::collections::HashMap;
use std::sync::{Arc, Mutex};

use axum::body::Bytes;
use axum::extract::{Path, State};
use axum::http::{header, HeaderValue, StatusCode};
use axum::response::{IntoResponse, Response};
use axum::routing::{get, post};
use axum::{Json, Router};
use serde::Deserialize;

use crate::dialogue::{open_session, DialogueError, QuestionOperator, Session};
use crate::kb::KnowledgeBase;
use crate::statement::{Compound, PlaceSlot};
use crate::wire::{ErrorRecord, FactRecord, SessionRecord};

#[derive(Clone)]
struct AppState {
    kb: Arc<KnowledgeBase>,
    sessions: Arc<Mutex<HashMap<String, Arc<Mutex<Session>>>>>,
}

struct ApiError(StatusCode, &'static str, String);

impl IntoResponse for ApiError {
    fn into_response(self) -> Response {
        let body = ErrorRecord {
            error: self.1.to_string(),
            message: self.2,
        };
        (self.0, Json(body)).into_response()
    }
}

impl From<DialogueError> for ApiError {
    fn from(e: DialogueError) -> Self {
        ApiError(StatusCode::CONFLICT, e.code(), e.to_string())
    }
}

fn malformed(e: impl std::fmt::Display) -> ApiError {
    ApiError(StatusCode::BAD_REQUEST, "malformed_body", e.to_string())
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct OpenRequest {
    fact: usize,
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct AskRequest {
    operator: String,
    #[serde(default)]
    slot: Option<String>,
}

async fn list_facts(State(state): State<AppState>) -> Json<Vec<FactRecord>> {
    let facts = state
        .kb
        .facts()
        .iter()
        .enumerate()
        .map(|(index, fact)| FactRecord {
            index,
            rendered: state.kb.render_compound(fact),
        })
        .collect();
    Json(facts)
}

async fn create_session(
    State(state): State<AppState>,
    body: Bytes,
) -> Result<Json<SessionRecord>, ApiError> {
    let req: OpenRequest = serde_json::from_slice(&body).map_err(malformed)?;
    let fact = state.kb.facts().get(req.fact).ok_or_else(|| {
        ApiError(
            StatusCode::NOT_FOUND,
            "unknown_fact",
            format!("no fact with index {}", req.fact),
        )
    })?;
    let Compound::Leaf(atom) = fact else {
        return Err(ApiError(
            StatusCode::CONFLICT,
            "compound_fact",
            "dialogue is only supported over single statements".into(),
        ));
    };
    let session = open_session(&state.kb, atom)?;
    let record = SessionRecord::new(&state.kb, &session);
    state
        .sessions
        .lock()
        .expect("session table poisoned")
        .insert(session.id().to_string(), Arc::new(Mutex::new(session)));
    Ok(Json(record))
}

fn find(state: &AppState, id: &str) -> Result<Arc<Mutex<Session>>, ApiError> {
    state
        .sessions
        .lock()
        .expect("session table poisoned")
        .get(id)
        .cloned()
        .ok_or_else(|| {
            ApiError(
                StatusCode::NOT_FOUND,
                "unknown_session",
                format!("no session `{id}`"),
            )
        })
}

async fn get_session(
    State(state): State<AppState>,
    Path(id): Path<String>,
) -> Result<Json<SessionRecord>, ApiError> {
    let session = find(&state, &id)?;
    let session = session.lock().expect("session poisoned");
    Ok(Json(SessionRecord::new(&state.kb, &session)))
}

async fn ask(
    State(state): State<AppState>,
    Path(id): Path<String>,
    body: Bytes,
) -> Result<Json<SessionRecord>, ApiError> {
    let req: AskRequest = serde_json::from_slice(&body).map_err(malformed)?;
    let op = QuestionOperator::parse(&req.operator)
        .ok_or_else(|| malformed(format!("unknown operator `{}`", req.operator)))?;
    let slot = match req.slot.as_deref() {
        None => None,
        Some(s) => Some(
            PlaceSlot::from_keyword(s).ok_or_else(|| malformed(format!("unknown slot `{s}`")))?,
        ),
    };
    let session = find(&state, &id)?;
    let mut session = session.lock().expect("session poisoned");
    session.ask(op, slot)?;
    Ok(Json(SessionRecord::new(&state.kb, &session)))
}

async fn preflight() -> StatusCode {
    StatusCode::NO_CONTENT
}

async fn allow_any_origin(mut response: Response) -> Response {
    let headers = response.headers_mut();
    headers.insert(header::ACCESS_CONTROL_ALLOW_ORIGIN, HeaderValue::from_static("*"));
    headers.insert(
        header::ACCESS_CONTROL_ALLOW_METHODS,
        HeaderValue::from_static("GET, POST, OPTIONS"),
    );
    headers.insert(
        header::ACCESS_CONTROL_ALLOW_HEADERS,
        HeaderValue::from_static("content-type"),
    );
    response
}

/// The `/api` router over a frozen knowledge base.
pub fn router(kb: Arc<KnowledgeBase>) -> Router {
    let state = AppState {
        kb,
        sessions: Arc::default(),
    };
    Router::new()
        .route("/api/facts", get(list_facts).options(preflight))
        .route("/api/session", post(create_session).options(preflight))
        .route("/api/session/{id}", get(get_session).options(preflight))
        .route("/api/session/{id}/ask", post(ask).options(preflight))
        .layer(axum::middleware::map_response(allow_any_origin))
        .with_state(state)
}

/// Serves until the process receives Ctrl-C.
pub async fn serve(kb: Arc<KnowledgeBase>, listener: tokio::net::TcpListener) -> std::io::Result<()> {
    axum::serve(listener, router(kb))
        .with_graceful_shutdown(async {
            let _ = tokio::signal::ctrl_c().await;
        })
        .await
}
