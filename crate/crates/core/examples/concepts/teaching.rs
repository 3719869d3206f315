// (name, description, alternate name, alternate description, participant quote)
pub const CONCEPTS: &[(&str, &str, &str, &str, &str)] = &[
    (
        "Student engagement",
        "Keeping students attentive and involved in class",
        "Engaging learners",
        "Efforts to hold student interest during lessons",
        "My biggest challenge is keeping students engaged for a whole lecture.",
    ),
    (
        "Active learning methods",
        "Students learn by doing rather than listening",
        "Hands-on learning activities",
        "Exercises that make students practise in class",
        "I replaced half my lecture with short exercises students do in pairs.",
    ),
    (
        "Assessment design",
        "Choosing how students are evaluated",
        "Designing evaluations",
        "Deciding the form and weight of assessments",
        "I redesigned the assessment so that the exam counts less and projects count more.",
    ),
    (
        "Feedback to students",
        "Giving timely and useful comments on student work",
        "Quality of student feedback",
        "Comments that help students improve",
        "Students tell me the written feedback helps them more than the grade.",
    ),
    (
        "Large class sizes",
        "Many students make personal contact difficult",
        "Teaching very large cohorts",
        "Difficulty of individual attention with hundreds of students",
        "With three hundred students I cannot learn their names let alone their needs.",
    ),
    (
        "Shift to online teaching",
        "Moving courses online changed teaching practice",
        "Remote teaching transition",
        "Adapting lessons for online delivery",
        "Moving online during the pandemic forced me to rethink every lesson.",
    ),
    (
        "Teacher workload",
        "Teaching duties consume a great deal of time",
        "Heavy teaching load",
        "Time pressure from preparation and grading",
        "Grading alone takes most of my weekends during term.",
    ),
    (
        "Industry relevance of curriculum",
        "Aligning course content with industry needs",
        "Curriculum and industry alignment",
        "Keeping content useful for future employers",
        "Companies tell us what skills they need and I try to bring that into the course.",
    ),
    (
        "Project-based learning",
        "Students learn through extended real projects",
        "Learning through projects",
        "Course built around a substantial project",
        "The semester project is where students really learn.",
    ),
    (
        "Group work dynamics",
        "Issues arising when students work in teams",
        "Student teamwork problems",
        "Free riding and conflict in group assignments",
        "In every group there is someone who does nothing and the others complain.",
    ),
    (
        "Academic integrity",
        "Preventing cheating and plagiarism",
        "Plagiarism concerns",
        "Ensuring students submit their own work",
        "Plagiarism in programming assignments has become a real problem.",
    ),
    (
        "Generative AI use by students",
        "Students using AI tools to complete work",
        "Student reliance on AI tools",
        "Impact of chatbots on student assignments",
        "Since ChatGPT appeared I cannot tell who wrote the essays.",
    ),
    (
        "Student motivation",
        "Reasons students invest or not in learning",
        "Learner motivation",
        "What drives students to put in effort",
        "Motivated students learn no matter what; my job is to motivate the others.",
    ),
    (
        "Diverse prior knowledge",
        "Students arrive with very different backgrounds",
        "Heterogeneous student backgrounds",
        "Wide gaps in what students already know",
        "Some students have coded for years and others have never written a line.",
    ),
    (
        "Support from teaching assistants",
        "Assistants help run labs and answer questions",
        "Role of teaching assistants",
        "Helpers who support the teacher with students",
        "Without my teaching assistants the labs would be impossible.",
    ),
    (
        "Recorded lectures",
        "Lectures available as videos after class",
        "Lecture recordings",
        "Video capture of lessons for later viewing",
        "Since lectures are recorded many students watch them at double speed instead of coming.",
    ),
    (
        "Flipped classroom",
        "Students study content before class and practise during it",
        "Inverted classroom model",
        "Class time used for practice after self study",
        "In the flipped format they watch videos at home and we solve problems together in class.",
    ),
    (
        "Institutional support",
        "Help and resources provided by the university",
        "University backing for teaching",
        "Resources and policies that enable teaching",
        "The university talks about teaching quality but gives us little support.",
    ),
    (
        "Teacher professional development",
        "Training teachers to improve their teaching",
        "Pedagogical training",
        "Courses that help teachers teach better",
        "The pedagogy workshops changed how I plan my lessons.",
    ),
    (
        "Research versus teaching balance",
        "Tension between research and teaching duties",
        "Competing academic duties",
        "Trade-off between time for research and for teaching",
        "Promotion depends on research so teaching always comes second.",
    ),
    (
        "Student wellbeing",
        "Mental health and stress of students",
        "Student mental health",
        "Concern for stress and wellbeing of learners",
        "More and more students tell me they are struggling with anxiety.",
    ),
    (
        "Declining attendance",
        "Fewer students come to class in person",
        "Low class attendance",
        "Empty lecture halls despite enrolment",
        "Attendance drops after the third week every year.",
    ),
    (
        "Learning management systems",
        "Platforms used to organise course material",
        "Course platforms like Moodle",
        "Online systems for content and submissions",
        "Everything goes through Moodle: slides submissions and grades.",
    ),
    (
        "Course redesign",
        "Reworking a course structure and content",
        "Rebuilding a course",
        "Major revision of how a course is organised",
        "I rebuilt the course from scratch after two bad years.",
    ),
    (
        "Peer assessment",
        "Students evaluate each other's work",
        "Student peer review",
        "Learners grading or commenting on peers",
        "Peer review taught them as much as doing the assignment itself.",
    ),
    (
        "Formative quizzes",
        "Low stakes tests to check understanding",
        "Practice quizzes",
        "Frequent short tests for learning not grading",
        "Weekly quizzes that do not count show me who is falling behind.",
    ),
    (
        "Real-world examples",
        "Using authentic cases to illustrate concepts",
        "Authentic case examples",
        "Connecting theory to practical situations",
        "When I use real examples from industry the room suddenly listens.",
    ),
    (
        "Accessibility needs",
        "Adapting teaching for students with disabilities",
        "Inclusive accessibility",
        "Accommodations for students with special needs",
        "I now caption every video because one student was hard of hearing.",
    ),
    (
        "Language barriers",
        "Students studying in a non-native language",
        "Non-native speaker difficulties",
        "Language limiting comprehension for some students",
        "International students often understand the concepts but struggle with the language.",
    ),
    (
        "Class participation",
        "Students asking and answering questions in class",
        "Participation in discussions",
        "Willingness of students to speak up in class",
        "Getting students to speak in class is harder every year.",
    ),
    (
        "Grading consistency",
        "Ensuring fair and uniform marking",
        "Fair marking across graders",
        "Consistency when many people grade",
        "With five assistants grading we needed detailed rubrics to stay fair.",
    ),
    (
        "Student evaluations of teaching",
        "End of course surveys about the teacher",
        "Course evaluation surveys",
        "Student ratings used to judge teaching",
        "The evaluation surveys mostly measure whether the course was easy.",
    ),
    (
        "Personal teaching philosophy",
        "Beliefs that guide how one teaches",
        "Teaching beliefs",
        "Underlying values shaping teaching choices",
        "I believe students learn by struggling a little; that guides everything I do.",
    ),
    (
        "Mentoring students",
        "Guiding students beyond course content",
        "Student mentorship",
        "Personal guidance on careers and studies",
        "Some of my best moments are mentoring students about their careers.",
    ),
    (
        "Lab sessions",
        "Practical sessions with guided exercises",
        "Practical lab classes",
        "Supervised hands-on exercise sessions",
        "Most of the real learning happens in the lab sessions.",
    ),
    (
        "Packed syllabus",
        "Too much content for the available time",
        "Time pressure in the syllabus",
        "Struggle to cover required topics",
        "The syllabus is so full that I rush through the last topics.",
    ),
    (
        "Collaboration among colleagues",
        "Teachers sharing materials and ideas",
        "Colleague cooperation",
        "Working with other teachers on courses",
        "Sharing materials with colleagues saved me a lot of time.",
    ),
    (
        "Recognition of teaching",
        "Good teaching is rarely rewarded",
        "Lack of teaching rewards",
        "Little career credit for teaching effort",
        "Nobody gets promoted for being a good teacher.",
    ),
    (
        "Questions outside class",
        "Students reach out by email and forums",
        "Out of class student contact",
        "Handling student questions between lessons",
        "I get dozens of emails a day with questions that could go on the forum.",
    ),
    (
        "Reflective practice",
        "Teachers reflecting on their own teaching",
        "Reflecting on teaching",
        "Reviewing what worked after each course",
        "After each semester I write down what worked and what did not.",
    ),
    (
        "Hybrid teaching",
        "Teaching in person and online at the same time",
        "Blended in-person and online classes",
        "Serving room and remote students together",
        "Teaching to the room and to a camera at the same time is exhausting.",
    ),
    (
        "Exam anxiety",
        "Students stressed by high stakes exams",
        "Test anxiety",
        "Fear and pressure around final exams",
        "Good students freeze in the exam because so much depends on one day.",
    ),
    (
        "Clear learning outcomes",
        "Stating what students should be able to do",
        "Explicit learning objectives",
        "Defining intended outcomes for the course",
        "Writing clear learning outcomes forced me to decide what really matters.",
    ),
    (
        "Own materials versus textbooks",
        "Choosing between textbooks and custom materials",
        "Custom course materials",
        "Writing your own notes instead of using a book",
        "I stopped using the textbook and wrote my own notes.",
    ),
    (
        "Gamification",
        "Game elements used to motivate learning",
        "Game-based motivation",
        "Points and challenges to drive participation",
        "Adding badges and a leaderboard got them doing extra exercises.",
    ),
    (
        "Soft skills development",
        "Teaching communication and teamwork skills",
        "Developing transferable skills",
        "Skills beyond technical content",
        "Employers want communication skills so I make them present their work.",
    ),
    (
        "Student autonomy",
        "Students taking responsibility for their learning",
        "Self-directed learning",
        "Learners managing their own progress",
        "I want them to become independent learners not to wait for me.",
    ),
    (
        "Guest speakers from industry",
        "Practitioners invited to talk to students",
        "Industry guest lectures",
        "Visits from professionals to the course",
        "A guest speaker from a company convinces them more than I ever can.",
    ),
    (
        "High failure rates",
        "Many students fail or drop the course",
        "Course failure and dropout",
        "Concern about students not passing",
        "Forty percent failing the first programming course is not acceptable.",
    ),
    (
        "Inclusion and equity",
        "Making sure all students have a fair chance",
        "Equitable teaching",
        "Reducing disadvantages among student groups",
        "I try hard to make sure first generation students feel they belong.",
    ),
    (
        "Programming tools in class",
        "Choice of development tools for teaching",
        "Teaching tools and environments",
        "Software environments used in lessons",
        "We switched to an online coding environment so nobody loses time installing tools.",
    ),
    (
        "Mid-course student feedback",
        "Asking students for feedback during the course",
        "Early course feedback",
        "Checking in with students before the course ends",
        "I ask for anonymous feedback after four weeks so I can still change things.",
    ),
    (
        "Passion for teaching",
        "Personal enjoyment and commitment to teaching",
        "Love of teaching",
        "Intrinsic motivation to teach",
        "Despite everything I love teaching; it is why I stay in academia.",
    ),
];
