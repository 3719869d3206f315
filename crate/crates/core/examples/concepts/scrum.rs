// (name, description, alternate name, alternate description, participant quote)
// Names and descriptions stay free of commas so codebook entries can be told
// apart in the joined list of the same-meaning prompt.
pub const CONCEPTS: &[(&str, &str, &str, &str, &str)] = &[
    ("Daily standups", "Short daily meetings to sync the team on progress", "Daily stand-up meetings", "Brief morning check-ins about work done and blockers", "We meet every morning for fifteen minutes and everyone says what they did and what is blocking them."),
    ("Sprint planning sessions", "Team agrees on the work to pull into the sprint", "Planning the sprint scope", "Deciding together which backlog items fit the next iteration", "At the start of each sprint we sit down and pick the stories we believe we can finish."),
    ("Sprint retrospectives", "Regular reflection on what went well and what to improve", "Retrospective meetings", "End of sprint review of the team process", "The retrospective is where we talk honestly about what went wrong and what we should change."),
    ("Backlog refinement", "Ongoing grooming and clarification of backlog items", "Grooming the product backlog", "Preparing and splitting stories before planning", "We spend an hour a week grooming the backlog so the stories are ready for planning."),
    ("Scrum Master as facilitator", "Scrum Master removes impediments and guides the process", "Role of the Scrum Master", "Facilitator who protects the team and coaches the process", "Our Scrum Master mostly clears impediments and keeps the meetings on track."),
    ("Product Owner availability", "Product Owner is often too busy to answer questions", "Absent Product Owner", "Limited access to the person who owns priorities", "Our Product Owner is in so many meetings that we wait days for answers."),
    ("Estimating user stories", "Team sizes stories before committing to them", "Story estimation practice", "Sizing backlog items as a group exercise", "We play planning poker to estimate every story before it enters a sprint."),
    ("Skepticism about story points", "Doubts that points measure anything meaningful", "Story points seen as arbitrary", "Belief that point values are guesses with little meaning", "Honestly I am not sure story points mean anything; they feel like made up numbers."),
    ("Choosing sprint length", "Teams debate one week versus longer iterations", "Iteration length decisions", "Trade-offs between short and long sprints", "We moved from three week sprints to two weeks because three felt too long to get feedback."),
    ("Definition of done", "Shared agreement on when work counts as complete", "Agreed completion criteria", "Team checklist that a story must satisfy to be finished", "Our definition of done includes code review and tests; without it people called things done too early."),
    ("Tracking team velocity", "Measuring completed points per sprint over time", "Velocity as a planning metric", "Using past throughput to forecast future sprints", "We track velocity every sprint and use the average to plan the next one."),
    ("Burndown charts", "Visual tracking of remaining work during a sprint", "Sprint burndown visualisation", "Chart showing remaining effort day by day", "The burndown chart on the wall shows quickly if we are falling behind."),
    ("Self-organising teams", "Team decides how to do the work without a manager", "Team self-organisation", "Developers organise their own tasks and approach", "Nobody assigns tasks to us; we decide ourselves who picks up what."),
    ("Resistance from management", "Managers push back on giving up control", "Management pushback on Scrum", "Leaders reluctant to change traditional command structures", "Middle management resisted because they felt Scrum took away their control."),
    ("Scrum as a cultural shift", "Adopting Scrum changes values and mindset not only process", "Mindset change required by Scrum", "Scrum demands new attitudes beyond new meetings", "Scrum is really a culture change; the ceremonies are the easy part."),
    ("Remote collaboration challenges", "Working from home makes Scrum events harder", "Difficulties of remote Scrum", "Distributed work weakens team communication", "Since we went remote the standups feel flat and people hide behind muted microphones."),
    ("Dependence on Jira tooling", "Tools shape how the process is run", "Jira as the process backbone", "Ticket tools drive the way teams apply Scrum", "Sometimes it feels like we do whatever Jira lets us do rather than real Scrum."),
    ("Accumulating technical debt", "Pressure to deliver leaves shortcuts in the code", "Technical debt build-up", "Fast delivery creating long term maintenance problems", "Every sprint we cut corners and the technical debt keeps growing."),
    ("Cross-functional team composition", "Teams hold all the skills needed to deliver", "Mixed skill teams", "Developers testers and designers working in one team", "Having testers and designers inside the team made a huge difference."),
    ("Communicating with stakeholders", "Keeping external stakeholders informed and aligned", "Stakeholder engagement", "Managing expectations of people outside the team", "A lot of my time goes into explaining to stakeholders what the team is doing."),
    ("Sprint review demos", "Showing working software at the end of each sprint", "Demoing increments in reviews", "Presenting finished work to stakeholders for feedback", "The sprint review demo is the only time some stakeholders actually see the product."),
    ("Scope creep during sprints", "New requests sneak into a running sprint", "Mid-sprint scope changes", "Work added after the sprint has started", "Managers keep adding urgent items in the middle of the sprint."),
    ("Meeting overhead", "Too much time spent in Scrum ceremonies", "Excessive ceremony time", "Feeling that meetings crowd out real work", "Between planning refinement review and retro we spend too much time in meetings."),
    ("Psychological safety", "Team members feel safe to speak up and admit mistakes", "Safe environment to speak openly", "Trust that raising problems will not be punished", "People only started raising problems in retros once they felt safe to do so."),
    ("Continuous integration", "Automated builds and frequent merging support sprints", "Automated build pipelines", "Frequent integration keeps the increment releasable", "Without continuous integration we could never have a releasable increment every sprint."),
    ("Testing inside the sprint", "Testing happens within the iteration rather than after", "In-sprint quality assurance", "Verifying work before the sprint ends", "We learned to test within the sprint instead of throwing work over to QA later."),
    ("Scaling Scrum to many teams", "Coordinating several Scrum teams on one product", "Multi-team Scrum coordination", "Frameworks and practices for Scrum at scale", "With eight teams on one product the coordination became the real problem."),
    ("Onboarding new team members", "Bringing newcomers up to speed in a Scrum team", "Integrating newcomers", "Helping new people learn the team process", "New hires learn our way of working mostly by pairing during their first sprints."),
    ("Customer feedback loops", "Getting user feedback quickly to steer development", "Frequent customer input", "Short cycles to validate work with real users", "The best part is getting feedback from customers every two weeks instead of once a year."),
    ("Documentation trade-offs", "Balancing working software against written documentation", "Reduced documentation", "Tension between light documentation and knowledge retention", "We write much less documentation now and sometimes we regret it."),
    ("Hybrid waterfall practices", "Scrum mixed with traditional phase based planning", "Water-Scrum-fall", "Iterations inside a fixed upfront plan", "Honestly we run sprints inside a waterfall plan with fixed milestones."),
    ("Certification and training", "Formal courses and certificates for Scrum roles", "Scrum training courses", "Learning the framework through certification programmes", "I did the certification course but I learned much more on the job."),
    ("Team size limits", "Small teams work better than large ones", "Keeping teams small", "Problems when a Scrum team grows too large", "When our team grew to twelve people the standups stopped working."),
    ("Unplanned work interruptions", "Support issues and urgent bugs disrupt the sprint", "Interruptions from urgent work", "Production incidents pulling people out of sprint work", "Production support keeps pulling developers out of the sprint."),
    ("Conflicting priorities", "Different stakeholders demand different things first", "Priority conflicts between stakeholders", "Competing demands on the same team", "Three departments all think their feature is the top priority."),
    ("Transparency of progress", "Everyone can see the state of the work", "Visible work status", "Open information about what is done and what is not", "The board makes it transparent to everyone where we really are."),
    ("Commitment versus forecast", "Whether the sprint goal is a promise or an estimate", "Sprint commitment pressure", "Treating the sprint plan as a binding promise", "Management treats our sprint forecast as a hard commitment."),
    ("Sustainable pace and burnout", "Constant sprinting can exhaust the team", "Burnout from continuous sprints", "Risk of fatigue with no break between iterations", "Sprint after sprint with no breather leads to people burning out."),
    ("Working across time zones", "Distributed teams struggle to find shared meeting times", "Time zone coordination", "Scheduling ceremonies for globally spread teams", "With half the team in Asia someone always has a standup at an awful hour."),
    ("Comparison with Kanban", "Teams weigh Scrum against a flow based approach", "Kanban as an alternative", "Continuous flow instead of fixed iterations", "For our operations team Kanban fits better than fixed sprints."),
    ("Release planning", "Planning releases across several sprints", "Longer term release roadmaps", "Coordinating what ships in which release", "We still need a release plan because marketing wants dates months ahead."),
    ("Dependencies between teams", "Work blocked by other teams outside the sprint", "Inter-team dependencies", "Waiting on other groups to finish their part", "Half our stories are blocked because we depend on the platform team."),
    ("Incremental delivery of value", "Delivering small usable pieces frequently", "Frequent value delivery", "Shipping working increments instead of big bangs", "Delivering something usable every sprint changed how the business sees us."),
    ("Shared accountability", "The whole team owns outcomes rather than individuals", "Collective ownership", "Team wide responsibility for sprint results", "In Scrum the team succeeds or fails together; there is no single person to blame."),
    ("Agile coaching support", "External coaches help teams adopt Scrum", "Help from agile coaches", "Guidance from experienced coaches during adoption", "Our agile coach helped us see which ceremonies we were doing mechanically."),
    ("Misuse of metrics by managers", "Velocity used to compare or judge teams", "Metrics used for control", "Management weaponising team metrics", "Management started comparing velocity between teams which destroyed trust in the numbers."),
    ("Limits to team autonomy", "Decisions still imposed from outside the team", "Constrained team independence", "Autonomy promised but not granted", "We are told we are autonomous but the architecture and tools are decided above us."),
    ("Unclear backlog ownership", "Confusion over who decides backlog order", "Backlog ownership confusion", "Several people trying to own priorities", "It was never clear whether the Product Owner or the manager owned the backlog."),
    ("Time for refactoring", "Teams struggle to reserve capacity for code cleanup", "Reserving refactoring capacity", "Negotiating time to improve existing code", "We have to fight to get any time for refactoring in the sprint."),
    ("Pair programming", "Two developers working together on one task", "Working in pairs", "Collaborative coding to share knowledge and catch errors", "Pair programming slowed us at first but the quality went up."),
    ("Knowledge sharing", "Spreading expertise so the team is not dependent on individuals", "Spreading know-how in the team", "Avoiding single points of knowledge", "We rotate tasks so that knowledge does not sit with only one person."),
    ("Team motivation", "Scrum affects engagement and enthusiasm of developers", "Developer engagement", "How the process influences team morale", "Seeing our work demoed every sprint really keeps people motivated."),
    ("Trust with management", "Relationship of trust between team and leadership", "Management and team trust", "Confidence between leaders and developers", "It took a year before management trusted us to plan our own work."),
    ("Fixed-price contracts", "Contracts with fixed scope clash with Scrum", "Contractual constraints", "Client agreements that lock scope and dates", "Our clients sign fixed price contracts so changing scope is a legal discussion."),
    ("Regulated environments", "Compliance requirements complicate iterative delivery", "Compliance constraints", "Audits and regulations slowing frequent releases", "In banking every release needs sign off from compliance which clashes with sprints."),
    ("Research spikes", "Timeboxed investigation before committing to work", "Timeboxed spikes", "Short research tasks to reduce uncertainty", "When we do not know enough we do a spike of a couple of days first."),
    ("Clear acceptance criteria", "Stories need explicit conditions for acceptance", "Acceptance criteria quality", "Ambiguous criteria lead to rework", "Vague acceptance criteria caused most of our rework."),
    ("Integrating UX design", "Fitting design work into sprint cadence", "UX work within Scrum", "Designers struggling to keep ahead of sprints", "Our designers work one sprint ahead otherwise developers wait for them."),
    ("DevOps alignment", "Operations and deployment practices aligned with sprints", "Link between DevOps and Scrum", "Deployment automation enabling sprint delivery", "Scrum only paid off once DevOps let us deploy whenever we wanted."),
    ("Estimation accuracy", "Estimates are often wrong despite the rituals", "Inaccurate estimates", "Gap between estimated and actual effort", "Our estimates are still wrong most of the time; we are just wrong more often."),
    ("Following up retro actions", "Improvement actions from retrospectives are often dropped", "Retro action follow-through", "Turning retrospective ideas into real change", "We list the same improvement actions every retro because nobody follows up."),
    ("Resolving team conflicts", "Handling disagreements inside the team", "Team conflict resolution", "Dealing with interpersonal tension in the team", "When two senior developers disagreed the whole sprint suffered."),
    ("Adapting Scrum to context", "Teams tailor the framework to their situation", "Tailoring the framework", "Modifying Scrum practices to fit the organisation", "We adapted Scrum a lot; purists would say we are not doing Scrum at all."),
    ("Mechanical Scrum adoption", "Following rituals without understanding the purpose", "Cargo cult Scrum", "Going through ceremonies with no real agility", "We do all the ceremonies but nothing about how we work has really changed."),
    ("Scrum in hardware projects", "Applying Scrum where physical products are built", "Hardware development fit", "Difficulties of sprints when building physical things", "In hardware you cannot ship an increment every two weeks; prototypes take months."),
    ("Support from leadership", "Senior leaders sponsor and protect the Scrum adoption", "Executive sponsorship", "Top management backing the transformation", "The change only worked because our director backed it openly."),
];
