import altair as alt
from vega_datasets import data

cars = data.cars()

chart = alt.Chart(cars).mark_area(opacity=0.8).encode(
    x=alt.X("year:T", title="Model year"),
    y=alt.Y("mean(mpg):Q", title="Miles per gallon"),
    tooltip=["year", "mpg"],
)
chart = chart.properties(title="Mean fuel efficiency over time", width=480, height=320)
chart = chart.configure_axis(labelFontSize=11, titleFontSize=13)
chart.save("chart.html")
