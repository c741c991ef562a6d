import altair as alt
from vega_datasets import data

cars = data.cars()

chart = alt.Chart(cars).mark_line().encode(
    x="year:T",
    y="mpg:Q",
)
chart = chart.properties(title="Fuel efficiency over time")
chart.save("chart.html")
